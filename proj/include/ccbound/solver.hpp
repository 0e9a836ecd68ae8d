#pragma once

/// \file solver.hpp
/// \brief Exact minimum clique cover (vertices and edges) of graphs with at
/// most 64 vertices.
///
/// The solver splits off isolated vertices, strips stars with `hat` until
/// none remain, then solves minimum set cover of the remaining edge set over
/// the maximal cliques by branch and bound. Stars are unioned back into every
/// clique of the reduced cover on the way out.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ccbound/graph.hpp"

namespace ccb {

struct CliqueCover {
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
};

/// All inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting).
/// Deterministic for a fixed graph; sorted with lex_less.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct SolveOptions {
  /// Strip stars before branching. Off means a raw branch and bound over the
  /// maximal cliques of the whole non-isolated part.
  bool preprocess = true;
  /// Search-node budget; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

class SolveLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  int stars_removed = 0;
};

/// A minimum-cardinality clique cover, cliques sorted with lex_less.
CliqueCover min_clique_cover(const Graph& g, const SolveOptions& options = {}, SolveStats* stats = nullptr);

/// |min_clique_cover(g)|.
Count theta_of(const Graph& g, const SolveOptions& options = {});

/// True iff every set is a nonempty clique of g, the sets are distinct, and
/// they cover every vertex and every edge.
bool verify_cover(const Graph& g, const CliqueCover& cover);

}  // namespace ccb
