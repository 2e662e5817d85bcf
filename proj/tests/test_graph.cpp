#include <doctest.h>

#include <algorithm>
#include <set>

#include "turangap/graph.hpp"
#include "turangap/graph_io.hpp"

using namespace turangap;

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edges builds a symmetric simple graph") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.min_degree() == 2);
  g.validate();
}

TEST_CASE("add_edge rejects loops and bad labels") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
  CHECK_THROWS_AS(g.add_edge(-1, 0), GraphError);
}

TEST_CASE("edges come out sorted and unique") {
  Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {0, 1}, {0, 3}});
  std::vector<std::pair<int, int>> want{{0, 1}, {0, 3}, {2, 3}};
  CHECK(g.edges() == want);
  CHECK(g.edge_count() == 3);  // duplicate collapsed
}

TEST_CASE("vertex count cap is enforced") {
  CHECK_THROWS_AS(Graph(Graph::kMaxVertices + 1), GraphError);
  CHECK_NOTHROW(Graph(Graph::kMaxVertices));
}

TEST_CASE("stock families have the expected sizes") {
  CHECK(families::complete(6).edge_count() == 15);
  CHECK(families::cycle(5).edge_count() == 5);
  CHECK(families::path(5).edge_count() == 4);
  CHECK(families::empty_graph(7).edge_count() == 0);
  Graph k23 = families::complete_multipartite({2, 3});
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(!k23.has_edge(0, 1));  // inside first part
  CHECK(k23.has_edge(0, 2));
}

TEST_CASE("petersen graph: 3-regular, 15 edges, girth-5 properties") {
  Graph p = families::petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(!clique_exists(p, 3));  // triangle-free
  // Any two adjacent vertices have no common neighbour; any two
  // non-adjacent ones have exactly one (strongly regular (10,3,0,1)).
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      int common = p.neighbors(u).and_count(p.neighbors(v));
      CHECK(common == (p.has_edge(u, v) ? 0 : 1));
    }
}

TEST_CASE("complement flips every off-diagonal pair") {
  Graph g = families::cycle(5);
  Graph c = complement(g);
  CHECK(c.edge_count() == 5);  // C(5,2) - 5
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(c.has_edge(u, v) != g.has_edge(u, v));
  CHECK(complement(families::complete(6)) == families::empty_graph(6));
}

TEST_CASE("power joins vertices within distance k") {
  Graph p6 = families::path(6);
  Graph sq = power(p6, 2);
  CHECK(sq.has_edge(0, 2));
  CHECK(!sq.has_edge(0, 3));
  CHECK(sq.edge_count() == 5 + 4);
  CHECK(power(p6, 1) == p6);
  CHECK(power(p6, 5) == families::complete(6));
  Graph c7sq = power(families::cycle(7), 2);
  for (int v = 0; v < 7; ++v) CHECK(c7sq.degree(v) == 4);
  CHECK_THROWS_AS(power(p6, 0), GraphError);
}

TEST_CASE("join adds all cross edges") {
  Graph j = join(families::cycle(5), families::empty_graph(2));
  CHECK(j.vertex_count() == 7);
  CHECK(j.edge_count() == 5 + 10);
  CHECK(j.has_edge(0, 5));
  CHECK(j.has_edge(4, 6));
  CHECK(!j.has_edge(5, 6));
  CHECK(join(families::complete(3), families::complete(4)) ==
        families::complete(7));
}

TEST_CASE("induced subgraph keeps original labels") {
  Graph p = families::petersen();
  auto sub = induced(p, {0, 1, 2, 5});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.original_label == std::vector<int>{0, 1, 2, 5});
  // 0-1, 1-2 on the outer cycle, 0-5 spoke.
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.graph.has_edge(0, 1));
  CHECK(sub.graph.has_edge(0, 3));
}

TEST_CASE("find_clique locates cliques and certifies their absence") {
  Graph k5 = families::complete(5);
  auto c = find_clique(k5, 5);
  REQUIRE(c.has_value());
  CHECK(*c == VertexSet{0, 1, 2, 3, 4});
  CHECK(!find_clique(k5, 6).has_value());

  Graph t = families::complete_multipartite({3, 3, 2});
  auto tri = find_clique(t, 3);
  REQUIRE(tri.has_value());
  std::set<int> parts;
  for (int v : *tri) parts.insert(v < 3 ? 0 : v < 6 ? 1 : 2);
  CHECK(parts.size() == 3);  // one vertex per part
  CHECK(!clique_exists(t, 4));

  CHECK(find_clique(families::cycle(7), 3) == std::nullopt);
  auto single = find_clique(families::empty_graph(3), 1);
  REQUIRE(single.has_value());
  CHECK(single->size() == 1);
}

TEST_CASE("find_clique witness is a real clique") {
  // Random-ish but fixed graph with planted K_4 on {2, 5, 7, 9}.
  Graph g = Graph::from_edges(
      10, {{2, 5}, {2, 7}, {2, 9}, {5, 7}, {5, 9}, {7, 9}, {0, 1}, {1, 3},
           {3, 4}, {4, 6}, {6, 8}, {8, 0}, {1, 5}, {3, 7}});
  auto c = find_clique(g, 4);
  REQUIRE(c.has_value());
  CHECK(*c == VertexSet{2, 5, 7, 9});
  for (std::size_t i = 0; i < c->size(); ++i)
    for (std::size_t j = i + 1; j < c->size(); ++j)
      CHECK(g.has_edge((*c)[i], (*c)[j]));
}

TEST_CASE("degeneracy order peels minimum degree first") {
  // Star: leaves go first; once only {0, 4} remain the degrees tie and the
  // smaller label wins, so the centre comes out fourth.
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto ord = degeneracy_order(star);
  CHECK(ord == std::vector<int>{1, 2, 3, 0, 4});
  // Regular graph: ties everywhere, smallest label repeatedly.
  auto ord5 = degeneracy_order(families::cycle(5));
  CHECK(ord5[0] == 0);
}

TEST_CASE("graph6 encodes known small graphs") {
  CHECK(to_graph6(families::complete(2)) == "A_");
  CHECK(to_graph6(families::complete(3)) == "Bw");
  CHECK(to_graph6(families::complete(4)) == "C~");
  CHECK(to_graph6(families::empty_graph(0)) == "?");
  CHECK(to_graph6(families::empty_graph(5)) == "D??");
  CHECK(from_graph6("A_") == families::complete(2));
  CHECK(from_graph6("C~") == families::complete(4));
}

TEST_CASE("graph6 round trip, including the long size form") {
  for (const Graph& g :
       {families::petersen(), families::cycle(13), families::complete(9),
        power(families::cycle(62), 3), families::cycle(63),
        families::complete_multipartite({20, 21, 30})}) {
    std::string s = to_graph6(g);
    Graph back = from_graph6(s);
    CHECK(back == g);
  }
  std::string long_form = to_graph6(families::cycle(63));
  CHECK(long_form[0] == '~');
  CHECK(from_graph6(long_form).vertex_count() == 63);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), GraphError);
  CHECK_THROWS_AS(from_graph6("D"), GraphError);       // truncated bits
  CHECK_THROWS_AS(from_graph6("C~~"), GraphError);     // trailing garbage
  CHECK_THROWS_AS(from_graph6("C\x1f\x1f"), GraphError);  // bytes below 63
}

TEST_CASE("edge list text round trip") {
  Graph g = families::petersen();
  Graph back = from_edge_list(to_edge_list(g));
  CHECK(back == g);
  Graph empty = from_edge_list("4\n");
  CHECK(empty.vertex_count() == 4);
  CHECK(empty.edge_count() == 0);
  CHECK_THROWS_AS(from_edge_list("3\n0 3\n"), GraphError);
  CHECK_THROWS_AS(from_edge_list(""), GraphError);
}

TEST_SUITE_END();
