#include "ccbound/solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace ccb {

namespace {

// Bron-Kerbosch with pivot u maximising |P & N(u)|.
void expand(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p == 0) {
    if (x == 0) out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (VertexSet cand = p | x; cand != 0; cand &= cand - 1) {
    const int u = std::countr_zero(cand);
    const int score = set_size(p & g.neighbors(u));
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (VertexSet rest = p & ~g.neighbors(pivot); rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const VertexSet bit = singleton_set(v);
    expand(g, r | bit, p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit;
    x |= bit;
  }
}

// Fixed-width edge bitset; the solver is instantiated for a few widths so a
// search node is a flat array copy with no allocation.
template <std::size_t W>
struct EdgeBits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
  bool none() const {
    for (auto x : w) {
      if (x) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int count_and(const EdgeBits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  void andnot(const EdgeBits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= ~o.w[i];
  }
  int first() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
    }
    return -1;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      for (std::uint64_t x = w[i]; x != 0; x &= x - 1) f(static_cast<int>(i * 64) + std::countr_zero(x));
    }
  }
};

// Minimum set cover of the edges of a graph without isolated vertices, using
// its maximal cliques as the candidate sets.
template <std::size_t W>
class EdgeCoverSearch {
 public:
  EdgeCoverSearch(const Graph& g, std::uint64_t node_limit, std::uint64_t& nodes)
      : node_limit_(node_limit), nodes_(nodes) {
    edges_ = g.edges();
    for (auto& row : index_) row.fill(-1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      index_[static_cast<std::size_t>(edges_[e].u)][static_cast<std::size_t>(edges_[e].v)] = static_cast<int>(e);
    }
    cliques_ = maximal_cliques(g);
    clique_bits_.resize(cliques_.size());
    covering_.resize(edges_.size());
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      const std::vector<int> vs = members(cliques_[c]);
      for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          const int e = edge_id(vs[a], vs[b]);
          clique_bits_[c].set(e);
          covering_[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
        }
      }
    }
    // together_[e] = edges f such that e and f fit in one clique (e included).
    together_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const VertexSet ends = singleton_set(edges_[e].u) | singleton_set(edges_[e].v);
      for (std::size_t f = 0; f < edges_.size(); ++f) {
        const VertexSet all = ends | singleton_set(edges_[f].u) | singleton_set(edges_[f].v);
        if (g.is_clique(all)) together_[e].set(static_cast<int>(f));
      }
    }
  }

  std::vector<VertexSet> solve() {
    EdgeBits<W> all;
    for (std::size_t e = 0; e < edges_.size(); ++e) all.set(static_cast<int>(e));
    best_ = greedy(all);
    std::vector<int> chosen;
    search(all, chosen);
    std::vector<VertexSet> out;
    out.reserve(best_.size());
    for (int c : best_) out.push_back(cliques_[static_cast<std::size_t>(c)]);
    return out;
  }

 private:
  int edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    return index_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }

  std::vector<int> greedy(EdgeBits<W> uncovered) const {
    std::vector<int> picked;
    while (!uncovered.none()) {
      int best = -1;
      int gain = 0;
      for (std::size_t c = 0; c < cliques_.size(); ++c) {
        const int here = uncovered.count_and(clique_bits_[c]);
        if (here > gain) {
          gain = here;
          best = static_cast<int>(c);
        }
      }
      picked.push_back(best);
      uncovered.andnot(clique_bits_[static_cast<std::size_t>(best)]);
    }
    return picked;
  }

  // Size of a greedily built set of uncovered edges no two of which share a clique.
  int separated_edges(EdgeBits<W> candidates) const {
    int count = 0;
    for (int e = candidates.first(); e >= 0; e = candidates.first()) {
      ++count;
      candidates.andnot(together_[static_cast<std::size_t>(e)]);
    }
    return count;
  }

  void search(const EdgeBits<W>& uncovered, std::vector<int>& chosen) {
    if (node_limit_ != 0 && nodes_ >= node_limit_) throw SolveLimitExceeded("clique cover search exceeded node limit");
    ++nodes_;
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::size_t depth = chosen.size();
    if (depth + 1 >= best_.size()) return;

    int capacity = 0;
    for (const auto& bits : clique_bits_) capacity = std::max(capacity, uncovered.count_and(bits));
    const int remaining = uncovered.count();
    const int by_capacity = (remaining + capacity - 1) / capacity;
    const int bound = std::max(by_capacity, separated_edges(uncovered));
    if (depth + static_cast<std::size_t>(bound) >= best_.size()) return;

    // Branch on the uncovered edge with the fewest covering cliques.
    int branch_edge = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](int e) {
      const std::size_t options = covering_[static_cast<std::size_t>(e)].size();
      if (options < fewest) {
        fewest = options;
        branch_edge = e;
      }
    });

    std::vector<std::pair<int, int>> order;  // (-gain, clique)
    for (int c : covering_[static_cast<std::size_t>(branch_edge)]) {
      order.emplace_back(-uncovered.count_and(clique_bits_[static_cast<std::size_t>(c)]), c);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [neg_gain, c] : order) {
      EdgeBits<W> next = uncovered;
      next.andnot(clique_bits_[static_cast<std::size_t>(c)]);
      chosen.push_back(c);
      search(next, chosen);
      chosen.pop_back();
      if (depth + 1 + 1 > best_.size()) break;
    }
  }

  std::uint64_t node_limit_;
  std::uint64_t& nodes_;
  std::vector<Edge> edges_;
  std::array<std::array<int, kMaxVertices>, kMaxVertices> index_{};
  std::vector<VertexSet> cliques_;
  std::vector<EdgeBits<W>> clique_bits_;
  std::vector<std::vector<int>> covering_;
  std::vector<EdgeBits<W>> together_;
  std::vector<int> best_;
};

std::vector<VertexSet> cover_edges(const Graph& g, std::uint64_t node_limit, std::uint64_t& nodes) {
  const Count m = g.size();
  if (m <= 64) return EdgeCoverSearch<1>(g, node_limit, nodes).solve();
  if (m <= 128) return EdgeCoverSearch<2>(g, node_limit, nodes).solve();
  if (m <= 256) return EdgeCoverSearch<4>(g, node_limit, nodes).solve();
  if (m <= 512) return EdgeCoverSearch<8>(g, node_limit, nodes).solve();
  if (m <= 1024) return EdgeCoverSearch<16>(g, node_limit, nodes).solve();
  return EdgeCoverSearch<32>(g, node_limit, nodes).solve();
}

std::vector<VertexSet> cover_impl(const Graph& g, const SolveOptions& options, SolveStats& stats) {
  const Decomposition d = decompose(g);
  std::vector<VertexSet> out;
  for (VertexSet rest = d.isolated; rest != 0; rest &= rest - 1) out.push_back(rest & (~rest + 1));
  if (d.c == 0) return out;
  if (d.s == d.c) {
    out.push_back(d.nonisolated);
    return out;
  }

  if (options.preprocess && d.s > 0) {
    const HatResult reduced = hat(g);
    stats.stars_removed += d.s;
    std::vector<int> old_of(static_cast<std::size_t>(reduced.graph.order()), -1);
    for (std::size_t v = 0; v < reduced.index_map.size(); ++v) {
      if (reduced.index_map[v] >= 0) old_of[static_cast<std::size_t>(reduced.index_map[v])] = static_cast<int>(v);
    }
    for (VertexSet clique : cover_impl(reduced.graph, options, stats)) {
      VertexSet lifted = 0;
      for (VertexSet rest = clique; rest != 0; rest &= rest - 1) {
        lifted |= singleton_set(old_of[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      if ((lifted & d.isolated) != 0) continue;  // already emitted as a singleton above
      out.push_back(lifted | d.stars);
    }
    return out;
  }

  // Every non-isolated vertex lies on an edge, so covering the edges is enough.
  std::vector<VertexSet> edge_cover = cover_edges(g, options.node_limit, stats.nodes);
  out.insert(out.end(), edge_cover.begin(), edge_cover.end());
  return out;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  expand(g, 0, g.vertices(), 0, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

CliqueCover min_clique_cover(const Graph& g, const SolveOptions& options, SolveStats* stats) {
  SolveStats local;
  CliqueCover cover{cover_impl(g, options, stats ? *stats : local)};
  std::sort(cover.cliques.begin(), cover.cliques.end(), lex_less);
  return cover;
}

Count theta_of(const Graph& g, const SolveOptions& options) {
  return static_cast<Count>(min_clique_cover(g, options).size());
}

bool verify_cover(const Graph& g, const CliqueCover& cover) {
  std::set<VertexSet> seen;
  VertexSet covered = 0;
  for (VertexSet c : cover.cliques) {
    if (c == 0 || (c & ~g.vertices()) != 0 || !g.is_clique(c)) return false;
    if (!seen.insert(c).second) return false;
    covered |= c;
  }
  if (covered != g.vertices()) return false;
  for (const Edge& e : g.edges()) {
    const VertexSet both = singleton_set(e.u) | singleton_set(e.v);
    const bool hit = std::any_of(cover.cliques.begin(), cover.cliques.end(),
                                 [both](VertexSet c) { return (c & both) == both; });
    if (!hit) return false;
  }
  return true;
}

}  // namespace ccb
