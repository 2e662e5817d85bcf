#include "turangap/homomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "turangap/constructions.hpp"

namespace turangap {

bool is_edge_preserving(const Graph& g, const Graph& h,
                        const std::vector<int>& map) {
  if ((int)map.size() != g.vertex_count()) return false;
  for (int v : map)
    if (v < 0 || v >= h.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(map[std::size_t(u)], map[std::size_t(v)])) return false;
  return true;
}

namespace {
constexpr int kSourceCap = 40;
constexpr int kTargetCap = 16;
}  // namespace

std::optional<HomomorphismMap> find_homomorphism(const Graph& g,
                                                 const Graph& h) {
  int gn = g.vertex_count(), hn = h.vertex_count();
  if (hn > kTargetCap) throw CapExceeded("find_homomorphism target", hn, kTargetCap);
  if (gn > kSourceCap) throw CapExceeded("find_homomorphism source", gn, kSourceCap);
  if (gn == 0) return HomomorphismMap{0, hn, {}};
  if (hn == 0) return std::nullopt;

  std::vector<int> order(static_cast<std::size_t>(gn));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  Bitset full(hn);
  for (int t = 0; t < hn; ++t) full.set(t);
  // domains[depth * gn + v]: viable targets for v after `depth` choices.
  std::vector<Bitset> domains(std::size_t(gn + 1) * std::size_t(gn), full);
  std::vector<int> map(std::size_t(gn), -1);

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == gn) return true;
    int u = order[std::size_t(depth)];
    const Bitset& dom = domains[std::size_t(depth) * std::size_t(gn) + std::size_t(u)];
    for (int t = dom.first(); t >= 0; t = dom.next(t)) {
      map[std::size_t(u)] = t;
      // Forward-check: every unassigned neighbour of u must land in N_h(t).
      bool dead = false;
      for (int i = 0; i < gn; ++i) {
        Bitset& next = domains[std::size_t(depth + 1) * std::size_t(gn) + std::size_t(i)];
        next = domains[std::size_t(depth) * std::size_t(gn) + std::size_t(i)];
        if (map[std::size_t(i)] == -1 && g.has_edge(u, i)) {
          next &= h.neighbors(t);
          if (next.none()) dead = true;
        }
      }
      if (!dead && self(self, depth + 1)) return true;
      map[std::size_t(u)] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  HomomorphismMap result{gn, hn, map};
  if (!is_edge_preserving(g, h, result.map))
    throw std::logic_error("find_homomorphism: produced map fails recheck");
  return result;
}

bool chromatic_at_most(const Graph& g, int k) {
  if (k < 0) throw GraphError("chromatic_at_most requires k >= 0");
  return find_homomorphism(g, families::complete(k)).has_value();
}

bool is_surjective(const HomomorphismMap& h) {
  std::vector<char> seen(std::size_t(h.target_n), 0);
  for (int t : h.map)
    if (t >= 0 && t < h.target_n) seen[std::size_t(t)] = 1;
  return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

std::vector<int> collapse_map(int d, int missing) {
  if (d < 2) throw GraphError("collapse_map requires d >= 2");
  int circ = 3 * d - 1;  // circulant size; vertex circ = apex
  if (missing < 0 || missing > circ)
    throw GraphError("collapse_map: missing vertex out of range");
  int target_apex = 3 * (d - 1) - 1;

  // The one-case map with the missing circulant vertex at position 3d-2.
  auto base = [&](int j) {
    if (j <= 3 * d - 5) return j;
    if (j == 3 * d - 4) return 0;
    if (j == 3 * d - 3) return 1;
    return target_apex;  // j == 3d-2 (apex-missing case) or j == apex
  };

  std::vector<int> map(std::size_t(circ + 1), -1);
  if (missing == circ) {
    for (int v = 0; v < circ; ++v) map[std::size_t(v)] = base(v);
  } else {
    int shift = (3 * d - 2 - missing) % circ;  // rotation sending missing there
    for (int v = 0; v < circ; ++v) {
      if (v == missing) continue;
      map[std::size_t(v)] = base((v + shift) % circ);
    }
    map[std::size_t(circ)] = target_apex;
  }

  // The construction stands or falls with edge preservation; check it on
  // the actual graphs rather than trusting the formula.
  Graph source = join(make_F(d), families::complete(1));
  Graph target = join(make_F(d - 1), families::complete(1));
  for (auto [u, v] : source.edges()) {
    if (u == missing || v == missing) continue;
    if (!target.has_edge(map[std::size_t(u)], map[std::size_t(v)]))
      throw GraphError("collapse_map: edge preservation failed");
  }
  return map;
}

std::vector<int> compose_maps(const std::vector<int>& before,
                              const std::vector<int>& after) {
  std::vector<int> out(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    int mid = before[i];
    if (mid < 0 || mid >= (int)after.size() || after[std::size_t(mid)] == -1)
      throw GraphError("compose_maps: image hits a hole");
    out[i] = after[std::size_t(mid)];
  }
  return out;
}

DegreeHypothesisReport check_degree_hypothesis(const Graph& g, int r, int d) {
  if (d < 1 || d > 9) throw GraphError("check_degree_hypothesis requires 1 <= d <= 9");
  if (r < 2) throw GraphError("check_degree_hypothesis requires r >= 2");
  DegreeHypothesisReport rep;
  rep.r = r;
  rep.d = d;
  rep.n = g.vertex_count();
  rep.krfree = !clique_exists(g, r + 1);
  rep.min_degree = g.min_degree();
  long long den = (long long)(2 * d - 1) * r - d + 1;
  rep.threshold = (Rational(1) - Rational(2 * d - 1, den)) * rep.n;
  rep.hypothesis_met = rep.krfree && Rational(rep.min_degree) > rep.threshold;
  if (rep.hypothesis_met) {
    rep.map_attempted = true;
    Graph target = join(make_F(d), families::complete(r - 2));
    rep.map = find_homomorphism(g, target);
    rep.map_found = rep.map.has_value();
    rep.bug_flag = !rep.map_found;
  }
  return rep;
}

nlohmann::json to_json(const DegreeHypothesisReport& report) {
  nlohmann::json j{{"r", report.r},
                   {"d", report.d},
                   {"n", report.n},
                   {"krfree", report.krfree},
                   {"delta", report.min_degree},
                   {"threshold", to_string(report.threshold)},
                   {"hypothesis_met", report.hypothesis_met},
                   {"map_attempted", report.map_attempted},
                   {"map_found", report.map_found},
                   {"bug_flag", report.bug_flag}};
  if (report.map) j["map"] = report.map->map;
  return j;
}

}  // namespace turangap
