#include <doctest.h>

#include "ccbound/extremal.hpp"
#include "ccbound/oracle.hpp"
#include "ccbound/solver.hpp"

using namespace ccb;

TEST_CASE("witness examples") {
  const WitnessResult a = witness(8, 9);
  CHECK(a.graph == with_singletons(complete_bipartite(3, 3), 2));
  CHECK(a.claimed_theta == 11);
  CHECK(a.guarantee == Guarantee::Proven);

  const WitnessResult b = witness(8, 17);
  CHECK(b.graph == complete_bipartite(4, 4).with_edge(0, 1));
  CHECK(b.claimed_theta == 12);
  CHECK(b.guarantee == Guarantee::Proven);

  const WitnessResult c = witness(8, 19);
  CHECK(c.graph == join_universal(complete_bipartite(3, 4), 1));
  CHECK(c.claimed_theta == 12);
  CHECK(c.guarantee == Guarantee::Proven);

  const WitnessResult d = witness(8, 28);
  CHECK(d.graph == Graph::complete(8));
  CHECK(d.claimed_theta == 1);
  CHECK(d.guarantee == Guarantee::Proven);

  CHECK(witness(8, 0).graph == Graph::empty(8));
}

TEST_CASE("the open point at n = 8 is confirmed by enumeration") {
  const WitnessResult w = witness(8, 23);
  CHECK(w.claimed_theta == 6);
  CHECK(w.guarantee == Guarantee::OracleVerified);
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(witness(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(witness(65, 0), std::invalid_argument);
  CHECK_THROWS_AS(witness(8, 29), std::invalid_argument);
  CHECK_THROWS_AS(witness(8, -1), std::invalid_argument);
  CHECK(to_string(Guarantee::OracleVerified) == "oracle-verified");
}

TEST_CASE("witness shape for every (n, m)") {
  for (int n = 4; n <= 14; ++n) {
    for (Count m = 0; m <= edge_capacity(n); ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const Graph g = witness_graph(n, m);
      REQUIRE(g.order() == n);
      REQUIRE(g.size() == m);
      if (m <= mmax(n)) REQUIRE_FALSE(has_triangle(g));
      if (m >= mmax(n)) REQUIRE(decompose(g).i == 0);
    }
  }
}

TEST_CASE("witnesses attain the closed form") {
  for (int n = 4; n <= 12; ++n) {
    for (Count m = 0; m <= edge_capacity(n); ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const WitnessResult w = witness(n, m);
      REQUIRE(w.claimed_theta == theta_of(w.graph));
      REQUIRE(w.claimed_theta <= theta_conjectured(n, m));
      if (w.guarantee != Guarantee::BestKnown) REQUIRE(w.claimed_theta == theta_conjectured(n, m));
    }
  }
}

TEST_CASE("witnesses are optimal for n <= 6") {
  for (int n = 4; n <= 6; ++n) {
    const ThetaProfile oracle = oracle_profile(n);
    for (Count m = 0; m <= edge_capacity(n); ++m) {
      CHECK(witness(n, m).claimed_theta == oracle.values[static_cast<std::size_t>(m)].value);
    }
  }
}
