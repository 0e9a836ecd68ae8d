#pragma once

/// \file graph.hpp
/// \brief Simple undirected graphs on at most 64 vertices, stored as one
/// neighbour bitset per vertex.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccbound/theta.hpp"

namespace ccb {

/// Bit v set <=> vertex v is in the set.
using VertexSet = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

constexpr VertexSet singleton_set(int v) { return VertexSet{1} << v; }
constexpr VertexSet first_vertices(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
inline int set_size(VertexSet s) { return std::popcount(s); }

/// Ascending member list.
std::vector<int> members(VertexSet s);

/// Orders vertex sets by their ascending member lists, lexicographically.
bool lex_less(VertexSet a, VertexSet b);

/// Position of the pair (u, v), u < v, in the column-major upper triangle
/// x(0,1), x(0,2), x(1,2), x(0,3), ... used by graph6.
constexpr int edge_index(int u, int v) { return v * (v - 1) / 2 + u; }

class Graph {
 public:
  /// Validating constructor: vertices in range, no self-loops, no duplicates.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from an adjacency table; throws if it is not symmetric,
  /// irreflexive and confined to the first n vertices.
  static Graph from_adjacency(int n, std::span<const VertexSet> adjacency);

  /// Bit edge_index(u, v) of `mask` selects edge (u, v). Requires n <= 11.
  static Graph from_edge_mask(int n, std::uint64_t mask);

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  Count size() const { return m_; }
  VertexSet vertices() const { return first_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return set_size(neighbors(v)); }
  bool adjacent(int u, int v) const { return contains(neighbors(u), v); }
  bool is_clique(VertexSet s) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Edge mask in graph6 bit order; requires n <= 11.
  std::uint64_t edge_mask() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Subgraph induced by `keep`, re-indexed densely in increasing order.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const;

 private:
  Graph(int n) : n_(n) { adj_.fill(0); }
  void check_vertex(int v) const;

  int n_ = 0;
  Count m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

struct Decomposition {
  VertexSet isolated = 0;     ///< degree-0 vertices
  VertexSet nonisolated = 0;  ///< everything else
  VertexSet stars = 0;        ///< non-isolated vertices adjacent to all other non-isolated ones
  int i = 0;
  int c = 0;
  int s = 0;
};

Decomposition decompose(const Graph& g);

/// The star-removal reduction. `index_map[v]` is the new index of old vertex v,
/// or -1 if v was removed. When the non-isolated part is a clique it is
/// contracted to one fresh singleton (the last vertex), and every vertex of
/// that clique maps to it.
struct HatResult {
  Graph graph;
  std::vector<int> index_map;
  VertexSet removed = 0;  ///< old vertices that are gone (the stars)
  bool contracted = false;
};

HatResult hat(const Graph& g);

bool has_triangle(const Graph& g);

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// Disjoint union with `count` isolated vertices appended.
Graph with_singletons(const Graph& g, int count);

/// Appends `count` vertices adjacent to every other vertex, old and new.
Graph join_universal(const Graph& g, int count);

// graph6 and the edge-list text format.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace ccb
