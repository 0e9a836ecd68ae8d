#include "ccbound/extremal.hpp"

#include <vector>

#include "ccbound/oracle.hpp"
#include "ccbound/solver.hpp"

namespace ccb {

namespace {

// Largest oracle run a witness call will start on its own.
constexpr std::uint64_t kOracleBudget = std::uint64_t{1} << 22;

// Triangle-free with no singletons on the fewest vertices that hold m edges:
// K_{p,q} (p + q = c) minus the surplus edges at vertex 0.
Graph left_host(int n, Count m) {
  int c = 2;
  while (mmax(c) < m) ++c;
  const int p = c / 2;
  const int q = c - p;
  Graph host = complete_bipartite(p, q);
  const Count surplus = mmax(c) - m;
  for (Count d = 0; d < surplus; ++d) host = host.without_edge(0, c - 1 - static_cast<int>(d));
  return with_singletons(host, n - c);
}

// K_{n/2,n/2} plus j edges from one hub to other vertices of its part; for odd
// n the hub sits in the larger part.
Graph plateau_host(int n, Count j) {
  const int a = n / 2;
  Graph g = complete_bipartite(a, n - a);
  const int hub = n % 2 == 0 ? 0 : a;
  for (Count d = 1; d <= j; ++d) g = g.with_edge(hub, hub + static_cast<int>(d));
  return g;
}

// K_{a,b} on t + 1 vertices joined to n - t - 1 universal vertices, where t is
// the largest with mmax(t) <= k; the first universal vertex then drops its
// edges to the first k - mmax(t) vertices of the smaller part.
Graph anchor_host(int n, Count k) {
  int t = 1;
  while (mmax(t + 1) <= k) ++t;
  const int a = (t + 1) / 2;
  const int b = t + 1 - a;
  Graph g = join_universal(complete_bipartite(a, b), n - t - 1);
  const Count surplus = k - mmax(t);
  for (Count d = 0; d < surplus; ++d) g = g.without_edge(t + 1, static_cast<int>(d));
  return g;
}

void check_range(int n, Count m) {
  if (n < 4 || n > kMaxVertices) throw std::invalid_argument("witness: n out of range (expected 4..64)");
  if (m < 0 || m > edge_capacity(n)) throw std::invalid_argument("witness: m out of range");
}

}  // namespace

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Proven: return "proven";
    case Guarantee::OracleVerified: return "oracle-verified";
    case Guarantee::BestKnown: return "best-known";
  }
  return "unknown";
}

Graph witness_graph(int n, Count m) {
  check_range(n, m);
  if (m == 0) return Graph::empty(n);
  if (m <= mmax(n)) return left_host(n, m);
  if (m < edge_capacity(n) - mmax(n - 2)) return plateau_host(n, m - mmax(n));
  return anchor_host(n, edge_capacity(n) - m);
}

WitnessResult witness(int n, Count m) {
  Graph g = witness_graph(n, m);
  const Count claimed = theta_of(g);
  const ThetaValue known = theta_proven(n, m);

  Guarantee guarantee = Guarantee::BestKnown;
  if (known.status == ThetaStatus::ExactProven && claimed == known.value) {
    guarantee = Guarantee::Proven;
  } else if (n <= 8 && detail::binomial(static_cast<int>(edge_capacity(n)), static_cast<int>(m)) <= kOracleBudget) {
    OracleOptions options;
    options.mode = EnumerationMode::Pruned;
    if (max_theta_over(n, m, options).value == claimed) guarantee = Guarantee::OracleVerified;
  }
  return {std::move(g), claimed, guarantee};
}

}  // namespace ccb
