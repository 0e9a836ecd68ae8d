#include <doctest.h>

#include <random>
#include <string>

#include "ccbound/graph.hpp"
#include "oracles.hpp"

using namespace ccb;

namespace {

Graph wheel5() {
  return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

}  // namespace

TEST_CASE("build") {
  const Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3 == Graph::path(3));
  CHECK(Graph::build(2, {}).size() == 0);
  CHECK(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}) == Graph::cycle(4));
  CHECK(Graph::build(3, {{1, 0}}).adjacent(0, 1));

  CHECK_THROWS_AS(Graph::build(0, {}), GraphError);
  CHECK_THROWS_AS(Graph::build(65, {}), GraphError);
  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::build(3, {{-1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 64);
    Count degree_sum = 0;
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      CHECK((g.neighbors(u) & ~g.vertices()) == 0);
      degree_sum += g.degree(u);
      for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.size());
    CHECK(static_cast<Count>(g.edges().size()) == g.size());
  }
}

TEST_CASE("adjacency and mask constructors validate") {
  const std::vector<VertexSet> asymmetric = {0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_adjacency(2, asymmetric), GraphError);
  const std::vector<VertexSet> loop = {0b01};
  CHECK_THROWS_AS(Graph::from_adjacency(1, loop), GraphError);
  CHECK(Graph::from_edge_mask(3, 0b101) == Graph::path(3));
  CHECK(Graph::from_edge_mask(4, 0b111111) == Graph::complete(4));
  CHECK(Graph::complete(4).edge_mask() == 0b111111);
}

TEST_CASE("edge editing") {
  const Graph g = Graph::path(3).with_edge(0, 2);
  CHECK(g == Graph::complete(3));
  CHECK(g.without_edge(2, 0) == Graph::path(3));
  CHECK_THROWS_AS(g.with_edge(0, 1), GraphError);
  CHECK_THROWS_AS(Graph::path(3).without_edge(0, 2), GraphError);
}

TEST_CASE("complete bipartite") {
  const Graph k33 = complete_bipartite(3, 3);
  CHECK(k33.order() == 6);
  CHECK(k33.size() == 9);
  CHECK_FALSE(has_triangle(k33));
  CHECK(k33.adjacent(0, 3));
  CHECK_FALSE(k33.adjacent(0, 1));
  CHECK(complete_bipartite(1, 1) == Graph::complete(2));
  CHECK(complete_bipartite(4, 4).with_edge(0, 1).size() == 17);
  CHECK_THROWS_AS(complete_bipartite(0, 3), GraphError);
  CHECK_THROWS_AS(complete_bipartite(32, 33), GraphError);
}

TEST_CASE("singletons and universal vertices") {
  const Graph g = with_singletons(complete_bipartite(3, 3), 2);
  CHECK(g.order() == 8);
  CHECK(g.size() == 9);
  CHECK(decompose(g).i == 2);
  CHECK(with_singletons(Graph::cycle(5), 0) == Graph::cycle(5));
  CHECK(with_singletons(Graph::empty(1), 3) == Graph::empty(4));
  CHECK_THROWS_AS(with_singletons(Graph::empty(60), 5), GraphError);

  const Graph j = join_universal(complete_bipartite(3, 4), 1);
  CHECK(j.order() == 8);
  CHECK(j.size() == 19);
  CHECK(join_universal(Graph::cycle(5), 0) == Graph::cycle(5));
  CHECK(join_universal(Graph::empty(1), 1) == Graph::complete(2));
  CHECK(join_universal(Graph::empty(2), 3).size() == 0 + 2 + 3 + 4);
  CHECK_THROWS_AS(join_universal(Graph::empty(64), 1), GraphError);
}

TEST_CASE("decompose") {
  const Decomposition w = decompose(wheel5());
  CHECK(w.i == 0);
  CHECK(w.c == 5);
  CHECK(w.stars == singleton_set(4));
  CHECK(w.s == 1);
  CHECK(decompose(complete_bipartite(3, 3)).s == 0);
  const Decomposition k = decompose(with_singletons(Graph::complete(4), 2));
  CHECK(k.i == 2);
  CHECK(k.c == 4);
  CHECK(k.s == 4);
  CHECK(k.isolated == (singleton_set(4) | singleton_set(5)));
}

TEST_CASE("hat") {
  const HatResult w = hat(wheel5());
  CHECK(w.graph == Graph::cycle(4));
  CHECK(w.index_map == std::vector<int>{0, 1, 2, 3, -1});
  CHECK(w.removed == singleton_set(4));
  CHECK_FALSE(w.contracted);

  const HatResult k = hat(Graph::complete(4));
  CHECK(k.graph == Graph::empty(1));
  CHECK(k.contracted);

  const HatResult b = hat(complete_bipartite(3, 3));
  CHECK(b.graph == complete_bipartite(3, 3));

  const HatResult e = hat(Graph::empty(3));
  CHECK(e.graph == Graph::empty(3));
  CHECK(e.index_map == std::vector<int>{0, 1, 2});

  // I(G) is kept and the clique becomes one extra singleton at the end.
  const HatResult mixed = hat(with_singletons(Graph::complete(3), 2));
  CHECK(mixed.graph == Graph::empty(3));
  CHECK(mixed.index_map == std::vector<int>{2, 2, 2, 0, 1});
}

TEST_CASE("hat arithmetic on random graphs") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = testing::random_graph(rng, 12);
    const Decomposition d = decompose(g);
    REQUIRE(d.i + d.c == g.order());
    REQUIRE((d.stars & ~d.nonisolated) == 0);
    for (int v : members(d.stars)) REQUIRE((g.neighbors(v) | singleton_set(v)) == d.nonisolated);
    const HatResult h = hat(g);
    const Decomposition dh = decompose(h.graph);
    if (d.c > 0 && !g.is_clique(d.nonisolated)) {
      REQUIRE(h.graph.order() == g.order() - d.s);
      REQUIRE(h.graph.size() == g.size() - d.s * (2 * d.c - d.s - 1) / 2);
    }
    REQUIRE(dh.c <= d.c - d.s);
    REQUIRE(dh.i >= d.i);
  }
}

TEST_CASE("triangles") {
  CHECK(has_triangle(Graph::complete(3)));
  CHECK_FALSE(has_triangle(complete_bipartite(3, 3)));
  CHECK_FALSE(has_triangle(Graph::cycle(5)));
  CHECK(has_triangle(wheel5()));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = testing::random_graph(rng, 12);
    bool naive = false;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = a + 1; b < g.order(); ++b) {
        for (int c = b + 1; c < g.order(); ++c) naive = naive || (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c));
      }
    }
    REQUIRE(has_triangle(g) == naive);
    if (!naive) REQUIRE(g.size() <= mmax(g.order()));
  }
}

TEST_CASE("graph6 known encodings") {
  CHECK(emit_graph6(Graph::complete(4)) == "C~");
  CHECK(emit_graph6(Graph::path(3)) == "Bg");
  CHECK(emit_graph6(Graph::empty(2)) == "A?");
  CHECK(emit_graph6(Graph::complete(2)) == "A_");
  CHECK(emit_graph6(Graph::empty(1)) == "@");
  CHECK(emit_graph6(Graph::empty(62)).front() == '}');
  CHECK(emit_graph6(Graph::empty(63)).substr(0, 4) == "~??~");
  CHECK(emit_graph6(Graph::empty(64)).substr(0, 4) == "~?@?");
  CHECK(parse_graph6("C~") == Graph::complete(4));
  CHECK(parse_graph6(">>graph6<<C~\n") == Graph::complete(4));
  CHECK(parse_graph6("  Bg  ") == Graph::path(3));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C!"), ParseError);
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);  // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6("~~??????"), ParseError);
  CHECK_THROWS_AS(parse_graph6("~?@@"), ParseError);  // n = 65
}

TEST_CASE("edge list format") {
  CHECK(emit_edge_list(Graph::path(3)) == "3\n0 1\n1 2\n");
  CHECK(parse_edge_list("3\n0 1\n1 2\n") == Graph::path(3));
  CHECK(parse_edge_list("\n4\n\n1 0\r\n  3 2 \n") == Graph::build(4, {{0, 1}, {2, 3}}));
  CHECK(parse_edge_list("5\n") == Graph::empty(5));
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
}

TEST_CASE("format roundtrips") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(rng, 64);
    REQUIRE(parse_graph6(emit_graph6(g)) == g);
    REQUIRE(parse_edge_list(emit_edge_list(g)) == g);
  }
}
