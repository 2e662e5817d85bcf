#pragma once

#include <vector>

#include "turangap/graph.hpp"
#include "turangap/rational.hpp"

namespace turangap {

struct PeelStep {
  int vertex;  // original label
  int degree;  // degree at deletion time
  int size;    // vertex count at deletion time (before this deletion)
};

/// Full record of a peeling run: enough to replay the deletions and to
/// recompute the edge-loss bound e(final) >= e(G) - gamma * sum(sizes).
struct PeelTrace {
  Rational gamma;
  std::vector<PeelStep> deleted;
  Graph final_graph;
  std::vector<int> final_labels;  // original labels, ascending
  Rational alpha;                 // v(final)/v(G); 1 for the empty input
};

/// Repeatedly deletes a vertex of degree <= gamma * (current vertex count)
/// until none remains; among deletable vertices the one of smallest degree
/// goes first, smallest original label on ties. All comparisons are exact
/// rational arithmetic. Afterwards min degree > gamma * v(final) or the
/// final graph is empty.
PeelTrace peel(const Graph& g, const Rational& gamma);

}  // namespace turangap
