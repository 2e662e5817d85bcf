#pragma once

#include <string>
#include <string_view>

#include "turangap/graph.hpp"

namespace turangap {

// graph6, header-less variant: N(n) then the upper triangle packed
// column-major into 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Plain text: "n" on line 1, then "u v" per edge line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Dispatches on extension: .g6 -> graph6, anything else -> edge list.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace turangap
