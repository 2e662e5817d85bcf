#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "turangap/graph.hpp"
#include "turangap/rational.hpp"

namespace turangap {

struct HomomorphismMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> map;  // source vertex -> target vertex
};

/// Does `map` send every edge of g to an edge of h? Entries must be valid
/// h-vertices; an edge mapped onto a single vertex fails (h has no loops).
bool is_edge_preserving(const Graph& g, const Graph& h,
                        const std::vector<int>& map);

/// Backtracking search with forward checking. Source vertices are tried in
/// descending-degree order (ascending label on ties), target values
/// ascending, so the result is deterministic. Requires v(h) <= 16 and
/// v(g) <= 40.
std::optional<HomomorphismMap> find_homomorphism(const Graph& g,
                                                 const Graph& h);

/// True iff g maps into K_k, i.e. chi(g) <= k.
bool chromatic_at_most(const Graph& g, int k);

bool is_surjective(const HomomorphismMap& h);

/// The explicit collapse from (F_d + apex) minus one vertex down to
/// F_{d-1} + apex: identify the two highest surviving circulant vertices
/// with 0 and 1, send the remaining special vertex to the target apex.
/// A missing circulant vertex is first rotated into position 3d-2, which
/// the circulant's rotational symmetry makes exact. Returns a vector over
/// all 3d source vertices with -1 at `missing`; edge preservation is
/// verified before returning and a failure throws (it would falsify the
/// construction, so it surfaces loudly). Requires d >= 2.
std::vector<int> collapse_map(int d, int missing);

/// after[before[v]] with -1 holes: hitting a hole in `after` throws.
std::vector<int> compose_maps(const std::vector<int>& before,
                              const std::vector<int>& after);

/// Outcome of testing "K_{r+1}-free and min degree beyond the (r, d)
/// threshold implies a homomorphism to F_d + K_{r-2}" on one graph.
/// bug_flag set means the hypothesis held but no map was found — that
/// would falsify the implementation, not the statement being tested.
struct DegreeHypothesisReport {
  int r = 0;
  int d = 0;
  int n = 0;
  bool krfree = false;       // G is K_{r+1}-free
  int min_degree = 0;
  Rational threshold;        // (1 - (2d-1)/((2d-1)r - d + 1)) * n
  bool hypothesis_met = false;
  bool map_attempted = false;
  bool map_found = false;
  bool bug_flag = false;
  std::optional<HomomorphismMap> map;
};

/// Equality with the threshold counts as hypothesis-unmet (the inequality
/// tested is strict). Requires 1 <= d <= 9 and r >= 2.
DegreeHypothesisReport check_degree_hypothesis(const Graph& g, int r, int d);

nlohmann::json to_json(const DegreeHypothesisReport& report);

}  // namespace turangap
