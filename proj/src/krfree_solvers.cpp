#include "turangap/krfree_solvers.hpp"

#include <algorithm>

#include "turangap/partition_solvers.hpp"

namespace turangap {

namespace {

/// All r-cliques of g as sets of edge indices into g.edges().
std::vector<Bitset> clique_hypergraph(const Graph& g, int r,
                                      const std::vector<std::pair<int, int>>& edges) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> eidx(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    eidx[u][v] = eidx[v][u] = int(i);
  }
  std::vector<Bitset> out;
  std::vector<int> stack;
  auto rec = [&](auto&& self, const Bitset& cand) -> void {
    if ((int)stack.size() == r) {
      Bitset m((int)edges.size());
      for (std::size_t i = 0; i < stack.size(); ++i)
        for (std::size_t j = i + 1; j < stack.size(); ++j)
          m.set(eidx[stack[i]][stack[j]]);
      out.push_back(std::move(m));
      return;
    }
    int start = stack.empty() ? -1 : stack.back();
    for (int v = cand.next(start); v >= 0; v = cand.next(v)) {
      stack.push_back(v);
      self(self, cand & g.neighbors(v));
      stack.pop_back();
    }
  };
  Bitset all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  rec(rec, all);
  return out;
}

/// Minimum-edge-hitting-set search over the clique hypergraph.
struct TransversalSearch {
  const std::vector<Bitset>& cliques;
  int m;                 // number of edges
  Bitset chosen;         // current transversal
  Bitset forbidden;      // edges excluded by earlier branches
  int chosen_count = 0;
  Bitset best;
  int best_count;

  TransversalSearch(const std::vector<Bitset>& cliques, int m)
      : cliques(cliques), m(m), chosen(m), forbidden(m), best(m),
        best_count(m + 1) {}

  /// Greedy edge-disjoint packing of unhit cliques: each needs its own
  /// edge, so chosen_count + packing size lower-bounds any completion.
  int packing_bound() const {
    Bitset used(m);
    int packed = 0;
    for (const Bitset& c : cliques) {
      if (c.and_count(chosen) > 0) continue;
      if (c.and_count(used) > 0) continue;
      used |= c;
      ++packed;
    }
    return chosen_count + packed;
  }

  void search() {
    if (packing_bound() >= best_count) return;
    // Most-constrained unhit clique; none left means a full transversal.
    int pick = -1, pick_avail = m + 1;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (cliques[i].and_count(chosen) > 0) continue;
      int a = cliques[i].count() - cliques[i].and_count(forbidden);
      if (a < pick_avail) {
        pick_avail = a;
        pick = int(i);
      }
    }
    if (pick == -1) {
      best = chosen;
      best_count = chosen_count;
      return;
    }
    if (pick_avail == 0) return;  // unhittable under current exclusions
    std::vector<int> branch;
    cliques[std::size_t(pick)].for_each([&](int e) {
      if (!forbidden.test(e)) branch.push_back(e);
    });
    for (int e : branch) {
      chosen.set(e);
      ++chosen_count;
      search();
      chosen.reset(e);
      --chosen_count;
      forbidden.set(e);
    }
    for (int e : branch) forbidden.reset(e);
  }
};

/// Drop redundant edges: re-add any whose removal from the transversal
/// leaves every clique hit. Scanning ascending keeps this deterministic.
void minimalize(const std::vector<Bitset>& cliques, Bitset& transversal) {
  transversal.for_each([&](int e) {
    transversal.reset(e);
    for (const Bitset& c : cliques)
      if (c.and_count(transversal) == 0 && c.test(e)) {
        transversal.set(e);
        return;
      }
  });
}

}  // namespace

EdgeSubsetCertificate max_krfree_exact(const Graph& g, int r) {
  if (r < 3) throw GraphError("max_krfree_exact requires r >= 3");
  int n = g.vertex_count();
  if (n > krfree_cap(r)) throw CapExceeded("max_krfree_exact", n, krfree_cap(r));

  auto edges = g.edges();
  int m = int(edges.size());
  auto cliques = clique_hypergraph(g, r, edges);

  Bitset transversal(m);
  if (!cliques.empty()) {
    TransversalSearch search(cliques, m);

    // Incumbent 1: delete the same-part edges of a greedy (r-1)-partition;
    // any K_r has two vertices sharing a part, so this hits every clique.
    auto part = greedy_partition(g, r - 1).assignment;
    Bitset same(m);
    for (int i = 0; i < m; ++i)
      if (part[edges[std::size_t(i)].first] == part[edges[std::size_t(i)].second])
        same.set(i);
    minimalize(cliques, same);
    search.best = same;
    search.best_count = same.count();

    // Incumbent 2: repeatedly take the edge hitting the most unhit cliques.
    Bitset hits(m);
    while (true) {
      std::vector<int> unhit_count(std::size_t(m), 0);
      bool any_unhit = false;
      for (const Bitset& c : cliques) {
        if (c.and_count(hits) > 0) continue;
        any_unhit = true;
        c.for_each([&](int e) { ++unhit_count[std::size_t(e)]; });
      }
      if (!any_unhit) break;
      int e = int(std::max_element(unhit_count.begin(), unhit_count.end()) -
                  unhit_count.begin());
      hits.set(e);
    }
    minimalize(cliques, hits);
    if (hits.count() < search.best_count) {
      search.best = hits;
      search.best_count = hits.count();
    }

    search.search();
    transversal = search.best;
  }

  EdgeSubsetCertificate cert;
  cert.r = r;
  cert.solver = "max_krfree_exact";
  Graph kept(n);
  for (int i = 0; i < m; ++i)
    if (!transversal.test(i)) {
      cert.kept_edges.push_back(edges[std::size_t(i)]);
      kept.add_edge(edges[std::size_t(i)].first, edges[std::size_t(i)].second);
    }
  cert.value = (long long)cert.kept_edges.size();
  if (clique_exists(kept, r))
    throw std::logic_error("max_krfree_exact: optimal subgraph fails recheck");
  return cert;
}

EdgeSubsetCertificate krfree_from_parts(const Graph& g,
                                        const std::vector<int>& part_of, int r) {
  int n = g.vertex_count();
  if ((int)part_of.size() != n)
    throw GraphError("krfree_from_parts: part list does not cover the graph");
  for (int p : part_of)
    if (p < 0) throw GraphError("krfree_from_parts: negative part label");
  EdgeSubsetCertificate cert;
  cert.r = r;
  cert.solver = "krfree_from_parts";
  Graph kept(n);
  for (auto [u, v] : g.edges())
    if (part_of[u] != part_of[v]) {
      cert.kept_edges.emplace_back(u, v);
      kept.add_edge(u, v);
    }
  cert.value = (long long)cert.kept_edges.size();
  if (auto witness = find_clique(kept, r))
    throw CliqueSurvives(r, *witness);
  return cert;
}

nlohmann::json certificate_json(const EdgeSubsetCertificate& cert, int n,
                                double wall_time_ms) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : cert.kept_edges) edges.push_back({u, v});
  return nlohmann::json{{"problem", "max-krfree-subgraph"},
                        {"n", n},
                        {"k_or_r", cert.r},
                        {"value", cert.value},
                        {"assignment_or_edges", edges},
                        {"solver", cert.solver},
                        {"deterministic", cert.deterministic},
                        {"wall_time_ms", wall_time_ms}};
}

}  // namespace turangap
