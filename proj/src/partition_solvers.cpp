#include "turangap/partition_solvers.hpp"

#include <algorithm>
#include <random>

#include "turangap/prng.hpp"

namespace turangap {

long long cross_edges(const Graph& g, const std::vector<int>& assignment) {
  if ((int)assignment.size() != g.vertex_count())
    throw GraphError("cross_edges: assignment length does not match graph");
  long long c = 0;
  for (auto [u, v] : g.edges())
    c += assignment[u] >= 0 && assignment[v] >= 0 &&
         assignment[u] != assignment[v];
  return c;
}

namespace {

/// Conditional-expectation core: assign every -1 vertex, in ascending
/// label order, to the part with fewest already-assigned neighbours.
std::vector<int> place_unassigned(const Graph& g, std::vector<int> a, int k) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (a[v] != -1) continue;
    std::vector<int> cnt(k, 0);
    g.neighbors(v).for_each([&](int w) {
      if (a[w] >= 0) ++cnt[a[w]];
    });
    a[v] = int(std::min_element(cnt.begin(), cnt.end()) - cnt.begin());
  }
  return a;
}

/// Move every vertex to a strictly less conflicted part until stable.
void polish_moves(const Graph& g, int k, std::vector<int>& a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> cnt(k, 0);
      g.neighbors(v).for_each([&](int w) { ++cnt[a[w]]; });
      int best = int(std::min_element(cnt.begin(), cnt.end()) - cnt.begin());
      if (cnt[best] < cnt[a[v]]) {
        a[v] = best;
        changed = true;
      }
    }
  }
}

/// Shared state for both passes of the exact solver. Vertices are placed
/// along `order`; cnt/adeg track, for every unplaced vertex, how its
/// placed neighbours are distributed.
struct KcutSearch {
  const Graph& g;
  int n, k;
  std::vector<int> order;
  std::vector<int> assign;             // by vertex; -1 = unplaced
  std::vector<std::vector<int>> cnt;   // cnt[v][p]
  std::vector<int> adeg;               // placed neighbours of v
  long long cut = 0;                   // cross edges among placed
  long long internal = 0;              // edges with both ends unplaced
  long long best_value = -1;
  std::vector<int> best_assign;

  KcutSearch(const Graph& g, int k, std::vector<int> ord)
      : g(g),
        n(g.vertex_count()),
        k(k),
        order(std::move(ord)),
        assign(g.vertex_count(), -1),
        cnt(g.vertex_count(), std::vector<int>(k, 0)),
        adeg(g.vertex_count(), 0),
        internal(g.edge_count()) {}

  void place(int v, int p) {
    cut += adeg[v] - cnt[v][p];
    assign[v] = p;
    g.neighbors(v).for_each([&](int w) {
      if (assign[w] == -1) {
        ++cnt[w][p];
        ++adeg[w];
        --internal;
      }
    });
  }

  void unplace(int v, int p) {
    assign[v] = -1;
    g.neighbors(v).for_each([&](int w) {
      if (assign[w] == -1 && w != v) {
        --cnt[w][p];
        --adeg[w];
        ++internal;
      }
    });
    cut -= adeg[v] - cnt[v][p];
  }

  /// Admissible upper bound on any completion: every unplaced vertex joins
  /// its least conflicted part, every unplaced-unplaced edge counts.
  long long bound() const {
    long long b = cut + internal;
    for (int v : order)
      if (assign[v] == -1)
        b += adeg[v] - *std::min_element(cnt[v].begin(), cnt[v].end());
    return b;
  }

  /// Pass 1: tighten best_value to the true optimum.
  void optimize(std::size_t depth, int used) {
    if (depth == order.size()) {
      if (cut > best_value) best_value = cut;
      return;
    }
    if (bound() <= best_value) return;
    int v = order[depth];
    int limit = std::min(used, k - 1);  // canonical: open at most one new part
    for (int p = 0; p <= limit; ++p) {
      place(v, p);
      optimize(depth + 1, std::max(used, p + 1));
      unplace(v, p);
    }
  }

  /// Pass 2: walk canonical assignments in lexicographic order (vertex 0
  /// upward, low parts first) and keep the first one achieving `target`.
  /// The lexicographically smallest optimal assignment is canonical, so
  /// this finds exactly it.
  bool reconstruct(std::size_t depth, int used, long long target) {
    if (depth == order.size()) {
      if (cut != target) return false;
      best_assign = assign;
      return true;
    }
    if (bound() < target) return false;
    int v = order[depth];
    int limit = std::min(used, k - 1);
    for (int p = 0; p <= limit; ++p) {
      place(v, p);
      if (reconstruct(depth + 1, std::max(used, p + 1), target)) return true;
      unplace(v, p);
    }
    return false;
  }
};

}  // namespace

PartitionCertificate greedy_partition(const Graph& g, int k) {
  if (k < 2) throw GraphError("greedy_partition requires k >= 2");
  auto a = place_unassigned(g, std::vector<int>(g.vertex_count(), -1), k);
  return {k, a, cross_edges(g, a), "greedy_partition", true};
}

PartitionCertificate extend_partition(const Graph& g,
                                      const PartitionCertificate& partial) {
  int k = partial.k;
  if (k < 2) throw GraphError("extend_partition requires k >= 2");
  if ((int)partial.assignment.size() != g.vertex_count())
    throw GraphError("extend_partition: assignment length does not match graph");
  for (int p : partial.assignment)
    if (p < -1 || p >= k)
      throw GraphError("extend_partition: part label out of range");
  auto a = place_unassigned(g, partial.assignment, k);
  return {k, a, cross_edges(g, a), "extend_partition", true};
}

PartitionCertificate max_kcut_local(const Graph& g, int k, std::uint64_t seed,
                                    int restarts) {
  if (k < 1) throw GraphError("max_kcut_local requires k >= 1");
  if (restarts < 1) throw GraphError("max_kcut_local requires restarts >= 1");
  int n = g.vertex_count();
  if (k == 1) return {1, std::vector<int>(n, 0), 0, "max_kcut_local", true};

  std::vector<int> best_a;
  long long best = -1;
  for (int r = 0; r < restarts; ++r) {
    std::vector<int> a;
    if (r == 0) {
      a = greedy_partition(g, k).assignment;
    } else {
      std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(std::uint64_t(r)));
      a.resize(n);
      for (int v = 0; v < n; ++v) a[v] = int(rng() % std::uint64_t(k));
    }
    polish_moves(g, k, a);
    long long val = cross_edges(g, a);
    if (val > best) {
      best = val;
      best_a = a;
    }
  }
  return {k, best_a, best, "max_kcut_local", true};
}

PartitionCertificate max_kcut_exact(const Graph& g, int k) {
  if (k < 2) throw GraphError("max_kcut_exact requires k >= 2");
  int n = g.vertex_count();
  if (n > kcut_cap(k)) throw CapExceeded("max_kcut_exact", n, kcut_cap(k));

  // Branch dense-core vertices first: the reverse of the peeling order
  // front-loads the vertices with the most mutual edges, which makes the
  // per-vertex bound bite early.
  std::vector<int> order = degeneracy_order(g);
  std::reverse(order.begin(), order.end());

  KcutSearch search(g, k, order);
  search.best_value = max_kcut_local(g, k, 0x5eedULL, 4).value;
  search.optimize(0, 0);

  // Natural vertex order for the lexicographic reconstruction.
  std::vector<int> natural(n);
  for (int v = 0; v < n; ++v) natural[v] = v;
  KcutSearch rebuild(g, k, natural);
  rebuild.reconstruct(0, 0, search.best_value);

  return {k, rebuild.best_assign, search.best_value, "max_kcut_exact", true};
}

nlohmann::json certificate_json(const PartitionCertificate& cert, int n,
                                double wall_time_ms) {
  return nlohmann::json{{"problem", "max-k-cut"},
                        {"n", n},
                        {"k_or_r", cert.k},
                        {"value", cert.value},
                        {"assignment_or_edges", cert.assignment},
                        {"solver", cert.solver},
                        {"deterministic", cert.deterministic},
                        {"wall_time_ms", wall_time_ms}};
}

}  // namespace turangap
