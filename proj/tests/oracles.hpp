#pragma once

// Brute-force reference implementations the solver tests are frozen
// against. Deliberately independent of the library: plain adjacency
// matrices, exhaustive loops, no shared helpers.

#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

inline std::vector<std::vector<char>> adjacency(int n, const Edges& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  return adj;
}

// Advance a base-k odometer; false once it wraps around to all zeros.
inline bool next_assignment(std::vector<int>& a, int k) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (++a[i] < k) return true;
    a[i] = 0;
  }
  return false;
}

// Maximum cross-edge count over every assignment in {0..k-1}^n.
inline long long max_kcut(int n, const Edges& edges, int k) {
  std::vector<int> a(n, 0);
  long long best = 0;
  do {
    long long cut = 0;
    for (auto [u, v] : edges) cut += a[u] != a[v];
    if (cut > best) best = cut;
  } while (next_assignment(a, k));
  return best;
}

// All r-subsets of {0..n-1} that are cliques, as edge-index sets.
inline std::vector<std::vector<int>> clique_edge_sets(int n, const Edges& edges,
                                                      int r) {
  auto adj = adjacency(n, edges);
  std::vector<std::vector<int>> out;
  std::vector<int> pick(r);
  auto edge_index = [&](int u, int v) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if ((a == u && b == v) || (a == v && b == u)) return (int)i;
    }
    return -1;
  };
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == r) {
      std::vector<int> idx;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) idx.push_back(edge_index(pick[i], pick[j]));
      out.push_back(idx);
      return;
    }
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int i = 0; i < depth; ++i) ok = ok && adj[pick[i]][v];
      if (!ok) continue;
      pick[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Largest K_r-free edge subset by trying all 2^m subsets. m <= ~22.
inline long long max_krfree(int n, const Edges& edges, int r) {
  auto cliques = clique_edge_sets(n, edges, r);
  std::vector<unsigned long long> masks;
  for (const auto& c : cliques) {
    unsigned long long m = 0;
    for (int i : c) m |= 1ULL << i;
    masks.push_back(m);
  }
  long long best = 0;
  for (unsigned long long keep = 0; keep < (1ULL << edges.size()); ++keep) {
    bool free_of_cliques = true;
    for (unsigned long long m : masks)
      if ((keep & m) == m) {
        free_of_cliques = false;
        break;
      }
    if (!free_of_cliques) continue;
    long long size = __builtin_popcountll(keep);
    if (size > best) best = size;
  }
  return best;
}

// Is there any edge-preserving map V(G) -> V(H)? |V(H)|^|V(G)| loop.
inline bool has_homomorphism(int gn, const Edges& ge, int hn, const Edges& he) {
  if (gn == 0) return true;
  if (hn == 0) return false;
  auto hadj = adjacency(hn, he);
  std::vector<int> f(gn, 0);
  do {
    bool ok = true;
    for (auto [u, v] : ge)
      if (!hadj[f[u]][f[v]]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (next_assignment(f, hn));
  return false;
}

}  // namespace oracle
