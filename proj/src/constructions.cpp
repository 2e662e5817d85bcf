#include "turangap/constructions.hpp"

#include <algorithm>
#include <random>

#include "turangap/prng.hpp"
#include <set>
#include <string>

namespace turangap {

Graph make_F(int d) {
  if (d < 1) throw GraphError("make_F requires d >= 1");
  if (d == 1) return families::complete(2);
  int n = 3 * d - 1;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int s = 1; s <= 3 * d - 2; s += 3) g.add_edge(v, (v + s) % n);
  return g;
}

Graph make_turan(int n, int k) {
  if (n < 0 || k < 1) throw GraphError("make_turan requires n >= 0, k >= 1");
  std::vector<int> sizes(std::min(n, k));
  int q = n / k, r = n % k;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    sizes[i] = q + (int(i) < r ? 1 : 0);
  return families::complete_multipartite(sizes);
}

long long theta_edge_count(const Rational& theta, int a, int b) {
  // Nearest integer to theta*a*b, halves rounded up; everything is >= 0 so
  // floor(x + 1/2) does the job, and integer division is floor here.
  Rational target = theta * a * b + Rational(1, 2);
  BigInt fl = numerator(target) / denominator(target);
  return fl.convert_to<long long>();
}

namespace {

// m distinct pair indices out of a*b, deterministic per (seed, pair_index).
std::vector<long long> sample_random_pairs(std::uint64_t seed, int pair_index,
                                           long long total, long long m) {
  std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * std::uint64_t(pair_index + 1))));
  std::set<long long> chosen;  // Floyd's sampling
  for (long long j = total - m; j < total; ++j) {
    long long t = (long long)bounded(rng, std::uint64_t(j + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

// Diagonal-major enumeration of the a*b grid: diagonal t emits
// (row, (row+t) mod b) for each row. The first m pairs spread the edges
// evenly over both sides, matching the regularity the construction needs.
std::vector<std::pair<int, int>> quasirandom_pairs(int a, int b, long long m) {
  std::vector<std::pair<int, int>> out;
  out.reserve(std::size_t(m));
  for (int t = 0; t < b && (long long)out.size() < m; ++t)
    for (int row = 0; row < a && (long long)out.size() < m; ++row)
      out.emplace_back(row, (row + t) % b);
  return out;
}

void place_theta_edges(Graph& g, const BlowupSpec& spec, int pair_index,
                       const std::vector<int>& offs, int pi, int pj) {
  int a = spec.part_sizes[std::size_t(pi)], b = spec.part_sizes[std::size_t(pj)];
  long long total = (long long)a * b;
  if (total == 0) return;
  long long m = theta_edge_count(spec.theta, a, b);
  if (m <= 0) return;
  if (m > total) m = total;
  if (spec.mode == ThetaMode::Quasirandom) {
    for (auto [x, y] : quasirandom_pairs(a, b, m))
      g.add_edge(offs[std::size_t(pi)] + x, offs[std::size_t(pj)] + y);
  } else {
    for (long long idx : sample_random_pairs(spec.seed, pair_index, total, m))
      g.add_edge(offs[std::size_t(pi)] + int(idx / b),
                 offs[std::size_t(pj)] + int(idx % b));
  }
}

void check_spec(const BlowupSpec& spec) {
  if (spec.theta < 0 || spec.theta > 1)
    throw GraphError("blowup: theta must lie in [0,1]");
  for (int s : spec.part_sizes)
    if (s < 0) throw GraphError("blowup: negative part size");
}

}  // namespace

PartitionedGraph make_pentagon_blowup(const BlowupSpec& spec) {
  check_spec(spec);
  std::vector<int> offs(6, 0);
  for (int i = 0; i < 5; ++i) offs[std::size_t(i) + 1] = offs[std::size_t(i)] + spec.part_sizes[std::size_t(i)];
  int n = offs[5];
  PartitionedGraph out{Graph(n), std::vector<int>(std::size_t(n)), 5};
  for (int i = 0; i < 5; ++i)
    for (int v = offs[std::size_t(i)]; v < offs[std::size_t(i) + 1]; ++v) out.part_of[std::size_t(v)] = i;
  // V_i together with V_{i+1} induces a clique.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int diff = (out.part_of[std::size_t(v)] - out.part_of[std::size_t(u)] + 5) % 5;
      if (diff == 0 || diff == 1 || diff == 4) out.graph.add_edge(u, v);
    }
  for (int i = 0; i < 5; ++i)
    place_theta_edges(out.graph, spec, i, offs, i, (i + 2) % 5);
  return out;
}

PartitionedGraph make_G4(const BlowupSpec& spec, int apex_size) {
  if (apex_size < 0) throw GraphError("make_G4: negative apex size");
  PartitionedGraph base = make_pentagon_blowup(spec);
  int n0 = base.graph.vertex_count();
  int n = n0 + apex_size;
  PartitionedGraph out{Graph(n), base.part_of, 6};
  for (auto [u, v] : base.graph.edges()) out.graph.add_edge(u, v);
  out.part_of.resize(std::size_t(n), 5);
  for (int a = n0; a < n; ++a)
    for (int v = 0; v < n0; ++v) out.graph.add_edge(a, v);
  return out;
}

PartitionedGraph make_Gr(const RecursiveSpec& spec) {
  if (spec.r < 4) throw GraphError("make_Gr requires r >= 4");
  if ((int)spec.apex_sizes.size() != spec.r - 3)
    throw GraphError("make_Gr: expected " + std::to_string(spec.r - 3) +
                     " apex sizes, got " + std::to_string(spec.apex_sizes.size()));
  for (int s : spec.apex_sizes)
    if (s < 0) throw GraphError("make_Gr: negative apex size");
  PartitionedGraph cur = make_G4(spec.base, spec.apex_sizes[0]);
  for (std::size_t j = 1; j < spec.apex_sizes.size(); ++j) {
    int n0 = cur.graph.vertex_count();
    int add = spec.apex_sizes[j];
    PartitionedGraph next{Graph(n0 + add), cur.part_of, cur.num_parts + 1};
    for (auto [u, v] : cur.graph.edges()) next.graph.add_edge(u, v);
    next.part_of.resize(std::size_t(n0 + add), cur.num_parts);
    for (int a = n0; a < n0 + add; ++a)
      for (int v = 0; v < n0; ++v) next.graph.add_edge(a, v);
    cur = std::move(next);
  }
  return cur;
}

std::vector<int> suggest_sizes(int r, int n) {
  if (r < 4 || n < 0) throw GraphError("suggest_sizes requires r >= 4, n >= 0");
  int parts = r + 2;
  std::vector<long long> weight(std::size_t(parts), 8);
  for (int p = 5; p < parts; ++p) weight[std::size_t(p)] = 15;
  long long wsum = 15LL * r - 5;
  std::vector<int> sizes(static_cast<std::size_t>(parts));
  std::vector<std::pair<Rational, int>> rem;  // (-remainder, index) for sorting
  long long assigned = 0;
  for (int p = 0; p < parts; ++p) {
    Rational quota = Rational(n) * weight[std::size_t(p)] / wsum;
    BigInt fl = numerator(quota) / denominator(quota);
    sizes[std::size_t(p)] = fl.convert_to<int>();
    assigned += sizes[std::size_t(p)];
    rem.emplace_back(Rational(fl) - quota, p);  // ascending = largest remainder first
  }
  std::sort(rem.begin(), rem.end());
  for (long long i = 0; i < n - assigned; ++i) ++sizes[std::size_t(rem[std::size_t(i)].second)];
  return sizes;
}

nlohmann::json to_json(const BlowupSpec& spec) {
  return nlohmann::json{
      {"part_sizes", spec.part_sizes},
      {"theta", to_string(spec.theta)},
      {"seed", spec.seed},
      {"mode", spec.mode == ThetaMode::Quasirandom ? "quasirandom" : "seeded-random"}};
}

BlowupSpec blowup_spec_from_json(const nlohmann::json& j) {
  BlowupSpec spec;
  auto sizes = j.at("part_sizes").get<std::vector<int>>();
  if (sizes.size() != 5) throw GraphError("spec: part_sizes must have 5 entries");
  std::copy(sizes.begin(), sizes.end(), spec.part_sizes.begin());
  if (j.at("theta").is_string())
    spec.theta = parse_rational(j.at("theta").get<std::string>());
  else
    spec.theta = rational_from_double(j.at("theta").get<double>());
  spec.seed = j.value("seed", std::uint64_t{0});
  std::string mode = j.value("mode", "seeded-random");
  if (mode == "quasirandom")
    spec.mode = ThetaMode::Quasirandom;
  else if (mode == "seeded-random")
    spec.mode = ThetaMode::SeededRandom;
  else
    throw GraphError("spec: unknown mode " + mode);
  return spec;
}

nlohmann::json to_json(const RecursiveSpec& spec) {
  return nlohmann::json{{"r", spec.r},
                        {"base", to_json(spec.base)},
                        {"apex_sizes", spec.apex_sizes}};
}

RecursiveSpec recursive_spec_from_json(const nlohmann::json& j) {
  RecursiveSpec spec;
  spec.r = j.at("r").get<int>();
  spec.base = blowup_spec_from_json(j.at("base"));
  spec.apex_sizes = j.at("apex_sizes").get<std::vector<int>>();
  return spec;
}

}  // namespace turangap
