#include "ccbound/graph.hpp"

#include <algorithm>

namespace ccb {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (diff == 0) return false;
  const VertexSet low = diff & (~diff + 1);
  // Sets agree below `low`; the one holding `low` is smaller unless the
  // other one has already ended.
  const VertexSet above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
  }
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  Graph g = empty(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.adj_[static_cast<std::size_t>(e.u)] |= singleton_set(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] |= singleton_set(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const VertexSet> adjacency) {
  Graph g = empty(n);
  if (adjacency.size() != static_cast<std::size_t>(n)) throw GraphError("adjacency table size mismatch");
  Count degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const VertexSet nb = adjacency[static_cast<std::size_t>(v)];
    if (nb & ~g.vertices()) throw GraphError("neighbour out of range");
    if (contains(nb, v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    g.adj_[static_cast<std::size_t>(v)] = nb;
    degree_sum += set_size(nb);
  }
  for (int v = 0; v < n; ++v) {
    for (VertexSet nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
      if (!g.adjacent(std::countr_zero(nb), v)) throw GraphError("adjacency is not symmetric");
    }
  }
  g.m_ = degree_sum / 2;
  return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  if (edge_capacity(n) > 64) throw GraphError("edge masks need n <= 11");
  Graph g = empty(n);
  for (; mask != 0; mask &= mask - 1) {
    int idx = std::countr_zero(mask);
    int v = 1;
    while (idx >= v) {
      idx -= v;
      ++v;
    }
    if (v >= n) throw GraphError("edge mask has bits beyond n");
    g.adj_[static_cast<std::size_t>(idx)] |= singleton_set(v);
    g.adj_[static_cast<std::size_t>(v)] |= singleton_set(idx);
    ++g.m_;
  }
  return g;
}

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("n out of range: " + std::to_string(n) + " (expected 1..64)");
  }
  return Graph(n);
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = g.vertices() & ~singleton_set(v);
  g.m_ = edge_capacity(n);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return build(n, e);
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return build(n, e);
}

bool Graph::is_clique(VertexSet s) const {
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((s & ~singleton_set(v) & ~neighbors(v)) != 0) return false;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (VertexSet nb = neighbors(u) & ~first_vertices(u + 1); nb != 0; nb &= nb - 1) {
      out.push_back({u, std::countr_zero(nb)});
    }
  }
  return out;
}

std::uint64_t Graph::edge_mask() const {
  if (edge_capacity(n_) > 64) throw GraphError("edge masks need n <= 11");
  std::uint64_t mask = 0;
  for (const Edge& e : edges()) mask |= std::uint64_t{1} << edge_index(e.u, e.v);
  return mask;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw GraphError("edge already present");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] |= singleton_set(v);
  g.adj_[static_cast<std::size_t>(v)] |= singleton_set(u);
  ++g.m_;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) throw GraphError("edge not present");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~singleton_set(v);
  g.adj_[static_cast<std::size_t>(v)] &= ~singleton_set(u);
  --g.m_;
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  const std::vector<int> old = members(keep);
  Graph g = empty(static_cast<int>(old.size()));
  Count degree_sum = 0;
  for (std::size_t i = 0; i < old.size(); ++i) {
    VertexSet nb = 0;
    for (std::size_t j = 0; j < old.size(); ++j) {
      if (adjacent(old[i], old[j])) nb |= singleton_set(static_cast<int>(j));
    }
    g.adj_[i] = nb;
    degree_sum += set_size(nb);
  }
  g.m_ = degree_sum / 2;
  return g;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Decomposition decompose(const Graph& g) {
  Decomposition d;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) {
      d.isolated |= singleton_set(v);
    } else {
      d.nonisolated |= singleton_set(v);
    }
  }
  for (VertexSet rest = d.nonisolated; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((d.nonisolated & ~singleton_set(v) & ~g.neighbors(v)) == 0) d.stars |= singleton_set(v);
  }
  d.i = set_size(d.isolated);
  d.c = set_size(d.nonisolated);
  d.s = set_size(d.stars);
  return d;
}

HatResult hat(const Graph& g) {
  const Decomposition d = decompose(g);
  std::vector<int> index_map(static_cast<std::size_t>(g.order()), -1);

  if (d.c == 0) {
    for (int v = 0; v < g.order(); ++v) index_map[static_cast<std::size_t>(v)] = v;
    return {g, std::move(index_map), 0, false};
  }

  if (d.s == d.c) {
    // C(G) is a clique: keep the isolated vertices, contract C(G) to one new singleton.
    int next = 0;
    for (VertexSet rest = d.isolated; rest != 0; rest &= rest - 1) {
      index_map[static_cast<std::size_t>(std::countr_zero(rest))] = next++;
    }
    for (VertexSet rest = d.nonisolated; rest != 0; rest &= rest - 1) {
      index_map[static_cast<std::size_t>(std::countr_zero(rest))] = next;
    }
    return {Graph::empty(next + 1), std::move(index_map), d.nonisolated, true};
  }

  const VertexSet keep = g.vertices() & ~d.stars;
  int next = 0;
  for (VertexSet rest = keep; rest != 0; rest &= rest - 1) {
    index_map[static_cast<std::size_t>(std::countr_zero(rest))] = next++;
  }
  return {g.induced(keep), std::move(index_map), d.stars, false};
}

bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet up = g.neighbors(u) & ~first_vertices(u + 1);
    for (VertexSet rest = up; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((up & g.neighbors(v) & ~first_vertices(v + 1)) != 0) return true;
    }
  }
  return false;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1 || a + b > kMaxVertices) throw GraphError("complete_bipartite: part sizes out of range");
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(a * b));
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) e.push_back({u, v});
  }
  return Graph::build(a + b, e);
}

Graph with_singletons(const Graph& g, int count) {
  if (count < 0 || g.order() + count > kMaxVertices) throw GraphError("with_singletons: too many vertices");
  std::vector<VertexSet> adjacency(static_cast<std::size_t>(g.order() + count), 0);
  for (int v = 0; v < g.order(); ++v) adjacency[static_cast<std::size_t>(v)] = g.neighbors(v);
  return Graph::from_adjacency(g.order() + count, adjacency);
}

Graph join_universal(const Graph& g, int count) {
  if (count < 0 || g.order() + count > kMaxVertices) throw GraphError("join_universal: too many vertices");
  const int n = g.order() + count;
  const VertexSet added = first_vertices(n) & ~g.vertices();
  std::vector<VertexSet> adjacency(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    adjacency[static_cast<std::size_t>(v)] =
        v < g.order() ? (g.neighbors(v) | added) : (first_vertices(n) & ~singleton_set(v));
  }
  return Graph::from_adjacency(n, adjacency);
}

}  // namespace ccb
