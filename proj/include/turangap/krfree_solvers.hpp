#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "turangap/graph.hpp"

namespace turangap {

/// A K_r-free spanning subgraph given by its kept edges. Freeness is
/// certified by a clique search before the certificate is returned.
struct EdgeSubsetCertificate {
  int r = 0;
  std::vector<std::pair<int, int>> kept_edges;  // u < v, lexicographic
  long long value = 0;
  std::string solver;
  bool deterministic = true;
};

/// Exact largest K_r-free subgraph, computed as e(G) minus a minimum edge
/// set meeting every K_r (branch and bound over the clique hypergraph,
/// lower-bounded by greedy edge-disjoint clique packing). Requires r >= 3
/// and v(G) <= 14 for r = 3, v(G) <= 16 otherwise.
EdgeSubsetCertificate max_krfree_exact(const Graph& g, int r);

inline constexpr int krfree_cap(int r) { return r == 3 ? 14 : 16; }

/// Keeps exactly the edges between distinct parts and certifies the result
/// K_r-free. part_of must assign every vertex a nonnegative part. Throws
/// CliqueSurvives (with the witness) if a K_r is left standing.
EdgeSubsetCertificate krfree_from_parts(const Graph& g,
                                        const std::vector<int>& part_of, int r);

nlohmann::json certificate_json(const EdgeSubsetCertificate& cert, int n,
                                double wall_time_ms);

}  // namespace turangap
