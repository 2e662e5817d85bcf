#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "test_util.hpp"
#include "turangap/constructions.hpp"
#include "turangap/homomorphism.hpp"
#include "turangap/partition_solvers.hpp"

using namespace turangap;

TEST_SUITE_BEGIN("homomorphism");

namespace {

// Independent-parts blowup of h: part v gets sizes[v] fresh vertices,
// cross edges follow h. Returns the graph and the natural part map.
std::pair<Graph, std::vector<int>> blowup(const Graph& h,
                                          const std::vector<int>& sizes) {
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> part;
  for (int v = 0; v < h.vertex_count(); ++v)
    part.insert(part.end(), std::size_t(sizes[std::size_t(v)]), v);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (h.has_edge(part[std::size_t(a)], part[std::size_t(b)])) g.add_edge(a, b);
  return {g, part};
}

oracle::Edges to_pairs(const Graph& g) { return g.edges(); }

}  // namespace

TEST_CASE("edge preservation is what it says") {
  Graph c5 = families::cycle(5);
  CHECK(is_edge_preserving(c5, c5, {0, 1, 2, 3, 4}));
  CHECK(!is_edge_preserving(c5, c5, {0, 0, 1, 2, 3}));  // 0-1 collapses
  CHECK(!is_edge_preserving(c5, c5, {0, 1}));           // wrong length
  CHECK(!is_edge_preserving(c5, c5, {0, 1, 2, 3, 9}));  // out of range
  CHECK(is_edge_preserving(families::cycle(4), families::complete(2),
                           {0, 1, 0, 1}));
}

TEST_CASE("basic homomorphism decisions") {
  Graph c5 = families::cycle(5), c7 = families::cycle(7);
  auto id_like = find_homomorphism(c5, c5);
  REQUIRE(id_like.has_value());
  CHECK(is_edge_preserving(c5, c5, id_like->map));

  auto odd = find_homomorphism(c7, c5);  // odd cycle into shorter odd cycle
  REQUIRE(odd.has_value());
  CHECK(is_edge_preserving(c7, c5, odd->map));

  CHECK(!find_homomorphism(families::complete(3), c5).has_value());
  CHECK(!find_homomorphism(c5, families::complete(2)).has_value());
  // Petersen has circular chromatic number 3, so no map into C_5 exists
  // even though it contains plenty of 5-cycles.
  CHECK(!find_homomorphism(families::petersen(), c5).has_value());
  CHECK(find_homomorphism(families::cycle(4), families::complete(2)).has_value());
  CHECK(find_homomorphism(families::empty_graph(0), c5).has_value());
  CHECK(!find_homomorphism(c5, families::empty_graph(0)).has_value());
}

TEST_CASE("solver and exhaustive enumeration agree on existence") {
  int found = 0;
  for (int i = 0; i < 50; ++i) {
    int gn = 2 + int(i % 6);
    int hn = 2 + int((i / 2) % 4);
    auto ge = testutil::random_edges(gn, 11000 + std::uint64_t(i));
    auto he = testutil::random_edges(hn, 12000 + std::uint64_t(i), 2, 3);
    Graph g = Graph::from_edges(gn, ge), h = Graph::from_edges(hn, he);
    bool want = oracle::has_homomorphism(gn, ge, hn, he);
    auto got = find_homomorphism(g, h);
    CHECK(got.has_value() == want);
    if (got) {
      ++found;
      CHECK(is_edge_preserving(g, h, got->map));
    }
  }
  CHECK(found > 5);  // the sample exercises both outcomes
}

TEST_CASE("deterministic output and caps") {
  Graph c15 = families::cycle(15);
  auto a = find_homomorphism(c15, families::cycle(5));
  auto b = find_homomorphism(c15, families::cycle(5));
  REQUIRE(a.has_value());  // wrap three times around
  CHECK(a->map == b->map);
  // The image of an odd cycle carries an odd closed walk, and every proper
  // subgraph of C_5 is bipartite, so any such map is onto.
  CHECK(is_surjective(*a));
  CHECK_THROWS_AS(find_homomorphism(families::empty_graph(41), families::cycle(5)),
                  CapExceeded);
  CHECK_THROWS_AS(find_homomorphism(families::cycle(5), families::empty_graph(17)),
                  CapExceeded);
}

TEST_CASE("chromatic bounds through homomorphisms into cliques") {
  Graph c5 = families::cycle(5);
  CHECK(!chromatic_at_most(c5, 2));
  CHECK(chromatic_at_most(c5, 3));
  CHECK(chromatic_at_most(make_turan(7, 3), 3));
  CHECK(chromatic_at_most(families::petersen(), 3));
  CHECK(!chromatic_at_most(families::petersen(), 2));

  // F_3 against the 3^8 exhaustive answer.
  Graph f3 = make_F(3);
  bool brute = oracle::has_homomorphism(8, to_pairs(f3), 3,
                                        to_pairs(families::complete(3)));
  CHECK(chromatic_at_most(f3, 3) == brute);
  CHECK(brute);  // two antipodal 4-cycles plus one swap vertex 3-colour it

  // Monotone in k.
  for (int i = 0; i < 10; ++i) {
    Graph g = Graph::from_edges(6, testutil::random_edges(6, 13000 + std::uint64_t(i)));
    bool prev = false;
    for (int k = 1; k <= 6; ++k) {
      bool now = chromatic_at_most(g, k);
      CHECK((prev ? now : true));
      prev = now;
    }
  }
}

TEST_CASE("full cut equals edge count exactly when the graph fits in k parts") {
  for (int i = 0; i < 100; ++i) {
    int n = 3 + int(i % 6);
    Graph g = Graph::from_edges(n, testutil::random_edges(n, 14000 + std::uint64_t(i)));
    for (int k : {2, 3})
      CHECK((max_kcut_exact(g, k).value == g.edge_count()) ==
            chromatic_at_most(g, k));
  }
}

TEST_CASE("blowups map home for d up to 4") {
  for (int d = 2; d <= 4; ++d) {
    Graph f = make_F(d);
    std::vector<int> sizes(std::size_t(f.vertex_count()));
    for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = 1 + int(i % 3);
    auto [g, nat] = blowup(f, sizes);
    CHECK(is_edge_preserving(g, f, nat));  // the collapse-the-parts map
    if (g.vertex_count() <= 40) {
      auto h = find_homomorphism(g, f);
      REQUIRE(h.has_value());
      CHECK(is_edge_preserving(g, f, h->map));
    }
  }
}

TEST_CASE("collapse maps exist and preserve edges for every missing vertex") {
  for (int d = 2; d <= 4; ++d) {
    Graph source = join(make_F(d), families::complete(1));
    Graph target = join(make_F(d - 1), families::complete(1));
    for (int missing = 0; missing < source.vertex_count(); ++missing) {
      auto g = collapse_map(d, missing);
      CHECK((int)g.size() == source.vertex_count());
      CHECK(g[std::size_t(missing)] == -1);
      for (int v = 0; v < source.vertex_count(); ++v) {
        if (v == missing) continue;
        CHECK(g[std::size_t(v)] >= 0);
        CHECK(g[std::size_t(v)] < target.vertex_count());
      }
      // Independent edge check, not the one inside collapse_map.
      for (auto [u, v] : source.edges()) {
        if (u == missing || v == missing) continue;
        CHECK(target.has_edge(g[std::size_t(u)], g[std::size_t(v)]));
      }
    }
  }
  CHECK_THROWS_AS(collapse_map(1, 0), GraphError);
  CHECK_THROWS_AS(collapse_map(3, 9), GraphError);
}

TEST_CASE("composing with the collapse walks a homomorphism down one level") {
  for (int d : {2, 3}) {
    Graph wheel = join(make_F(d), families::complete(1));
    Graph lower = join(make_F(d - 1), families::complete(1));
    for (int missing : {0, 3 * d - 2, 3 * d - 1}) {
      // A graph that maps to `wheel` while skipping `missing`: blow up the
      // other vertices.
      std::vector<int> sizes(std::size_t(wheel.vertex_count()), 2);
      sizes[std::size_t(missing)] = 0;
      auto [g, nat] = blowup(wheel, sizes);
      REQUIRE(is_edge_preserving(g, wheel, nat));
      HomomorphismMap f{g.vertex_count(), wheel.vertex_count(), nat};
      CHECK(!is_surjective(f));  // `missing` has no preimage
      auto down = compose_maps(nat, collapse_map(d, missing));
      CHECK(is_edge_preserving(g, lower, down));
    }
  }
  // Hitting the hole is rejected.
  CHECK_THROWS_AS(compose_maps({0, 4}, collapse_map(2, 4)), GraphError);
}

TEST_CASE("degree hypothesis: unmet cases report without running the solver") {
  // Petersen: min degree 3 is below the strict 2n/5 = 4 line.
  auto pet = check_degree_hypothesis(families::petersen(), 2, 2);
  CHECK(pet.krfree);
  CHECK(pet.min_degree == 3);
  CHECK(pet.threshold == 4);
  CHECK(!pet.hypothesis_met);
  CHECK(!pet.map_attempted);
  CHECK(!pet.bug_flag);

  // Balanced pentagon blowups sit exactly on the line; equality is unmet.
  for (int s : {3, 4}) {
    auto [g, nat] = blowup(families::cycle(5), {s, s, s, s, s});
    auto rep = check_degree_hypothesis(g, 2, 2);
    CHECK(rep.min_degree == 2 * s);
    CHECK(rep.threshold == 2 * s);
    CHECK(!rep.hypothesis_met);
  }

  // Uneven pentagon blowups fall below the line: the five degree sums
  // average to 2n/5, so the minimum only reaches it when balanced.
  auto [g, nat] = blowup(families::cycle(5), {5, 5, 5, 4, 4});
  auto rep = check_degree_hypothesis(g, 2, 2);
  CHECK(rep.min_degree == 9);
  CHECK(rep.threshold == Rational(46, 5));
  CHECK(!rep.hypothesis_met);
}

TEST_CASE("degree hypothesis: met cases must produce a verified map") {
  // Bipartite and dense: K_{5,5} clears 2n/5 and maps onto any edge.
  auto bip = check_degree_hypothesis(families::complete_multipartite({5, 5}), 2, 2);
  CHECK(bip.hypothesis_met);
  CHECK(bip.map_found);
  CHECK(!bip.bug_flag);
  REQUIRE(bip.map.has_value());
  CHECK(is_edge_preserving(families::complete_multipartite({5, 5}), make_F(2),
                           bip.map->map));

  // Pentagon plus three dominating vertices lands exactly on the r = 3
  // line 5n/8 (it is the extremal shape), so strictness rejects it.
  Graph wheelish = join(families::cycle(5), families::empty_graph(3));
  auto on_line = check_degree_hypothesis(wheelish, 3, 2);
  CHECK(on_line.min_degree == 5);
  CHECK(on_line.threshold == 5);
  CHECK(!on_line.hypothesis_met);

  // Complete tripartite clears it: min degree 6 > 45/8 and the proper
  // 3-colouring folds into hub plus one pentagon edge.
  Graph g = make_turan(9, 3);
  auto rep = check_degree_hypothesis(g, 3, 2);
  CHECK(rep.krfree);
  CHECK(rep.min_degree == 6);
  CHECK(rep.threshold == Rational(45, 8));
  CHECK(rep.hypothesis_met);
  CHECK(rep.map_found);
  CHECK(!rep.bug_flag);
  REQUIRE(rep.map.has_value());
  Graph target = join(make_F(2), families::complete(1));
  CHECK(is_edge_preserving(g, target, rep.map->map));

  auto j = to_json(rep);
  CHECK(j["hypothesis_met"] == true);
  CHECK(j["map_found"] == true);
  CHECK(j["threshold"] == "45/8");
  CHECK(j["delta"] == 6);

  CHECK_THROWS_AS(check_degree_hypothesis(g, 1, 2), GraphError);
  CHECK_THROWS_AS(check_degree_hypothesis(g, 3, 10), GraphError);
}

TEST_CASE("surjectivity bookkeeping") {
  CHECK(is_surjective({5, 5, {0, 1, 2, 3, 4}}));
  CHECK(!is_surjective({5, 5, {0, 1, 2, 3, 0}}));
  CHECK(is_surjective({3, 1, {0, 0, 0}}));  // everything onto K_1
}

TEST_SUITE_END();
