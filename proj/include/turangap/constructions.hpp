#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "turangap/graph.hpp"
#include "turangap/rational.hpp"

namespace turangap {

enum class ThetaMode { SeededRandom, Quasirandom };

/// Pentagon blowup parameters: five part sizes, the distance-two edge
/// density theta, and how those edges are placed.
struct BlowupSpec {
  std::array<int, 5> part_sizes{};
  Rational theta{1, 8};
  std::uint64_t seed = 0;
  ThetaMode mode = ThetaMode::SeededRandom;
};

struct RecursiveSpec {
  int r = 4;
  BlowupSpec base;
  std::vector<int> apex_sizes;  // one entry per apex part, length r-3
};

/// A graph together with the part structure it was built from. Parts are
/// laid out consecutively, part 0 first.
struct PartitionedGraph {
  Graph graph;
  std::vector<int> part_of;
  int num_parts = 0;

  std::vector<int> part_vertices(int p) const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (part_of[v] == p) out.push_back(v);
    return out;
  }
};

/// F_1 = K_2; for d >= 2 the circulant on Z_{3d-1} where v is adjacent to
/// v+s for every step s = 1 mod 3. d-regular on 3d-1 vertices, triangle-free.
Graph make_F(int d);

/// Complete k-partite graph on n vertices with parts as equal as possible.
Graph make_turan(int n, int k);

/// Number of distance-two edges placed between parts of sizes a and b:
/// round(theta*a*b), ties away from zero.
long long theta_edge_count(const Rational& theta, int a, int b);

PartitionedGraph make_pentagon_blowup(const BlowupSpec& spec);

/// Pentagon blowup plus an independent apex part joined to everything.
PartitionedGraph make_G4(const BlowupSpec& spec, int apex_size);

/// Recursive family: G_4 plus one further all-joined independent part per
/// additional r.
PartitionedGraph make_Gr(const RecursiveSpec& spec);

/// Part sizes for G_r on n vertices at the blowup:apex weight ratio 8:15,
/// apportioned by largest remainder (smaller part index wins ties).
std::vector<int> suggest_sizes(int r, int n);

nlohmann::json to_json(const BlowupSpec& spec);
BlowupSpec blowup_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RecursiveSpec& spec);
RecursiveSpec recursive_spec_from_json(const nlohmann::json& j);

}  // namespace turangap
