#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "turangap/graph.hpp"

namespace turangap {

/// A k-partition of the vertices together with its cross-edge count. The
/// value is always recomputable from the assignment via cross_edges.
struct PartitionCertificate {
  int k = 0;
  std::vector<int> assignment;  // vertex -> part in {0..k-1}, -1 = unassigned
  long long value = 0;
  std::string solver;
  bool deterministic = true;
};

/// Number of edges whose endpoints lie in different parts. Entries of -1
/// count as "unassigned": edges touching them are ignored.
long long cross_edges(const Graph& g, const std::vector<int>& assignment);

/// Exact maximum k-cut by branch and bound over a fixed vertex order with
/// canonical part numbering (a vertex may only open one part beyond those
/// already in use, which kills the k! symmetry). Returns the
/// lexicographically smallest optimal assignment. Requires k >= 2 and
/// v(G) <= 24 for k = 2, v(G) <= 20 otherwise.
PartitionCertificate max_kcut_exact(const Graph& g, int k);

inline constexpr int kcut_cap(int k) { return k == 2 ? 24 : 20; }

/// Multi-start single-vertex-move hill climbing: from each seeded random
/// start (restart 0 starts from the greedy partition), repeatedly move any
/// vertex whose reassignment gains cross edges until no move helps. The
/// result is vertex-move-optimal and deterministic in (seed, restarts).
/// k = 1 is allowed and returns the all-zero assignment.
PartitionCertificate max_kcut_local(const Graph& g, int k, std::uint64_t seed,
                                    int restarts);

/// Conditional-expectation derandomization: place vertices 0..n-1, each
/// into a part holding fewest of its already-placed neighbours (ties:
/// lowest part). Guarantees value >= ceil((k-1)/k * e(G)). Requires k >= 2.
PartitionCertificate greedy_partition(const Graph& g, int k);

/// Same placement rule applied to the vertices `partial` leaves at -1; the
/// assigned vertices keep their parts. With m = number of edges incident
/// to the unassigned set, guarantees
///   value >= (cross edges already fixed inside the assigned set)
///            + ceil((k-1)/k * m).
PartitionCertificate extend_partition(const Graph& g,
                                      const PartitionCertificate& partial);

/// {problem, n, k_or_r, value, assignment_or_edges, solver, deterministic,
/// wall_time_ms} — the stable on-disk certificate shape.
nlohmann::json certificate_json(const PartitionCertificate& cert, int n,
                                double wall_time_ms);

}  // namespace turangap
