#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph type and are deliberately naive.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ccbound/graph.hpp"

namespace ccb::testing {

inline bool naive_is_clique(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((s >> u) & 1U)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (((s >> v) & 1U) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

// Every nonempty clique, by scanning all vertex subsets. n <= 20.
inline std::vector<std::uint64_t> all_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
    if (naive_is_clique(g, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<std::uint64_t> naive_maximal_cliques(const Graph& g) {
  const auto cliques = all_cliques(g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t c : cliques) {
    bool maximal = true;
    for (std::uint64_t d : cliques) {
      if (d != c && (d & c) == c) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

inline bool naive_covers(const Graph& g, const std::vector<std::uint64_t>& family) {
  std::uint64_t seen = 0;
  for (std::uint64_t c : family) seen |= c;
  if (seen != (g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1)) return false;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      if (std::none_of(family.begin(), family.end(), [&](std::uint64_t c) { return (c & pair) == pair; })) return false;
    }
  }
  return true;
}

// Smallest covering subfamily of `pool`, by trying every subset.
inline int naive_min_cover(const Graph& g, const std::vector<std::uint64_t>& pool) {
  const std::size_t r = pool.size();
  int best = static_cast<int>(r) + 1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << r); ++pick) {
    const int size = std::popcount(pick);
    if (size >= best) continue;
    std::vector<std::uint64_t> family;
    for (std::size_t j = 0; j < r; ++j) {
      if ((pick >> j) & 1U) family.push_back(pool[j]);
    }
    if (naive_covers(g, family)) best = size;
  }
  return best;
}

// theta with the search restricted to maximal cliques plus singletons for
// isolated vertices (a maximal clique of an isolated vertex is the singleton).
inline int naive_theta(const Graph& g) { return naive_min_cover(g, naive_maximal_cliques(g)); }

// theta over every clique, maximal or not. Only for n <= 4.
inline int naive_theta_all_cliques(const Graph& g) { return naive_min_cover(g, all_cliques(g)); }

// Largest naive_theta over every labeled graph with n vertices and m edges.
inline int brute_force_Theta(int n, int m) {
  const int pairs = n * (n - 1) / 2;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (std::popcount(mask) != m) continue;
    best = std::max(best, naive_theta(Graph::from_edge_mask(n, mask)));
  }
  return best;
}

// The curve as a list of points walked by explicit step lists: the rising
// side from (2, n-1) and the falling side from (C(n,2)+1, 0), both stopping
// at the peak; the endpoints (0, n) and (1, n-1) are prepended.
inline std::vector<long long> step_walk_curve(int n) {
  const long long capacity = static_cast<long long>(n) * (n - 1) / 2;
  const long long peak = static_cast<long long>(n) * n / 4;
  std::vector<long long> left = {n, n - 1, n - 1};
  long long m = 2;
  long long y = n - 1;
  for (int d = 1; m < peak; ++d) {
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<std::pair<int, int>> steps = {{1, 0}};
      for (int j = 0; j < d; ++j) steps.push_back({1, 1});
      for (auto [dx, dy] : steps) {
        if (m >= peak) break;
        m += dx;
        y += dy;
        left.push_back(y);
      }
    }
  }
  std::vector<long long> right;  // right[j] = value at m = capacity - j
  long long x = capacity + 1;
  long long v = 0;
  for (int d = 1; x > peak; ++d) {
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<std::pair<int, int>> steps = {{-1, d}};
      for (int j = 0; j < d - 1; ++j) steps.push_back({-1, 0});
      for (auto [dx, dy] : steps) {
        if (x <= peak) break;
        x += dx;
        v += dy;
        right.push_back(v);
      }
    }
  }
  std::vector<long long> out(static_cast<std::size_t>(capacity + 1));
  for (long long i = 0; i <= peak; ++i) out[static_cast<std::size_t>(i)] = left[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < right.size(); ++j) {
    const long long at = capacity - static_cast<long long>(j);
    if (at >= peak) out[static_cast<std::size_t>(at)] = right[j];
  }
  return out;
}

// Random graph with independent edges of probability p.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::build(n, edges);
}

inline Graph random_graph(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> order(1, max_n);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const int n = order(rng);
  return random_graph(rng, n, density(rng));
}

}  // namespace ccb::testing
