#include "turangap/peeling.hpp"

namespace turangap {

PeelTrace peel(const Graph& g, const Rational& gamma) {
  int n = g.vertex_count();
  std::vector<char> alive(std::size_t(n), 1);
  std::vector<int> deg(std::size_t(n), 0);
  for (int v = 0; v < n; ++v) deg[std::size_t(v)] = g.degree(v);
  int remaining = n;

  PeelTrace trace;
  trace.gamma = gamma;
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[std::size_t(v)] &&
          (pick == -1 || deg[std::size_t(v)] < deg[std::size_t(pick)]))
        pick = v;
    if (Rational(deg[std::size_t(pick)]) > gamma * remaining) break;
    trace.deleted.push_back({pick, deg[std::size_t(pick)], remaining});
    alive[std::size_t(pick)] = 0;
    --remaining;
    g.neighbors(pick).for_each([&](int w) {
      if (alive[std::size_t(w)]) --deg[std::size_t(w)];
    });
  }

  VertexSet keep;
  for (int v = 0; v < n; ++v)
    if (alive[std::size_t(v)]) keep.push_back(v);
  auto sub = induced(g, keep);
  trace.final_graph = std::move(sub.graph);
  trace.final_labels = std::move(sub.original_label);
  trace.alpha = n == 0 ? Rational(1) : Rational(remaining, n);
  return trace;
}

}  // namespace turangap
