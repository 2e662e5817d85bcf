#include "turangap/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace turangap {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  if (n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " exceeds cap " +
                     std::to_string(kMaxVertices));
  rows_.assign(n, Bitset(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loops are not allowed");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) {
    int dv = degree(v);
    if (v == 0 || dv < d) d = dv;
  }
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(std::size_t(edge_count_));
  for (int u = 0; u < n_; ++u)
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

void Graph::validate() const {
  long long deg_sum = 0;
  for (int u = 0; u < n_; ++u) {
    if (rows_[u].test(u)) throw GraphError("loop at vertex " + std::to_string(u));
    deg_sum += rows_[u].count();
    for (int v = rows_[u].first(); v >= 0; v = rows_[u].next(v))
      if (!rows_[v].test(u))
        throw GraphError("asymmetric adjacency at " + std::to_string(u) + "," +
                         std::to_string(v));
  }
  if (deg_sum != 2 * edge_count_) throw GraphError("edge count out of sync");
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw GraphError("power requires k >= 1");
  int n = g.vertex_count();
  Graph out(n);
  // BFS from every vertex up to depth k.
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] == k) continue;
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          if (s < v) out.add_edge(s, v);
          q.push(v);
        }
      });
    }
  }
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  Graph out(ng + nh);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& xs) {
  std::vector<int> labels = xs;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int v : labels)
    if (v < 0 || v >= g.vertex_count())
      throw GraphError("induced: vertex out of range");
  Graph sub(int(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.has_edge(labels[i], labels[j])) sub.add_edge(int(i), int(j));
  return {std::move(sub), std::move(labels)};
}

namespace {

// Extends `clique` by vertices from `cand`; branches only on candidates
// outside the pivot's neighborhood.
bool extend_clique(const Graph& g, std::vector<int>& clique, Bitset cand,
                   int need) {
  if (need == 0) return true;
  if (cand.count() < need) return false;
  // Pivot: candidate with most candidate-neighbors, smallest label on ties.
  int pivot = -1, best = -1;
  cand.for_each([&](int u) {
    int c = g.neighbors(u).and_count(cand);
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  Bitset branch = cand;
  // branch on cand \ N(pivot), ascending
  for (int v = branch.first(); v >= 0; v = branch.next(v)) {
    if (g.has_edge(pivot, v)) continue;
    clique.push_back(v);
    if (extend_clique(g, clique, cand & g.neighbors(v), need - 1)) return true;
    clique.pop_back();
    cand.reset(v);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int r) {
  if (r < 1) throw GraphError("find_clique requires r >= 1");
  if (r > g.vertex_count()) return std::nullopt;
  Bitset all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
  std::vector<int> clique;
  if (extend_clique(g, clique, all, r)) {
    std::sort(clique.begin(), clique.end());
    return clique;
  }
  return std::nullopt;
}

std::vector<int> degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n), order;
  std::vector<bool> gone(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    gone[pick] = true;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](int u) {
      if (!gone[u]) --deg[u];
    });
  }
  return order;
}

namespace families {

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0) throw GraphError("negative part size");
    n += s;
  }
  Graph g(n);
  std::vector<int> part;
  part.reserve(n);
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part.push_back(int(p));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  // Outer C_5 on 0..4, inner pentagram on 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

}  // namespace families

}  // namespace turangap
