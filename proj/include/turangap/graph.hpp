#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turangap/bitset.hpp"
#include "turangap/errors.hpp"

namespace turangap {

/// Subset of the vertex range {0..n-1} of some host graph.
using VertexSet = std::vector<int>;

/// Simple undirected graph on dense vertex labels 0..n-1. Adjacency is a
/// symmetric, irreflexive bit matrix. Values are treated as immutable once
/// built; every operation below returns a fresh graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 4096;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return rows_[v].count(); }
  int min_degree() const;  // 0 for the empty-vertex graph
  const Bitset& neighbors(int v) const { return rows_[v]; }

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  /// Construction-time only; rejects loops and out-of-range endpoints.
  void add_edge(int u, int v);

  /// Rechecks symmetry, irreflexivity and the cached edge count.
  void validate() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<Bitset> rows_;
};

Graph complement(const Graph& g);

/// k-th power: u~v iff their distance in g lies in [1, k]. Requires k >= 1.
Graph power(const Graph& g, int k);

/// Disjoint union plus all cross edges (g's vertices first).
Graph join(const Graph& g, const Graph& h);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_label;  // original_label[new] = old
};

InducedSubgraph induced(const Graph& g, const VertexSet& xs);

/// First r-clique found by a pivoting search over ascending labels, or
/// nullopt. Deterministic. Requires r >= 1.
std::optional<VertexSet> find_clique(const Graph& g, int r);

inline bool clique_exists(const Graph& g, int r) {
  return find_clique(g, r).has_value();
}

/// Smallest-last elimination order: repeatedly remove a minimum-degree
/// vertex (smallest label on ties). Returned in removal order.
std::vector<int> degeneracy_order(const Graph& g);

// Stock graphs used throughout the toolkit and its tests.
namespace families {
Graph empty_graph(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph petersen();
}  // namespace families

}  // namespace turangap
