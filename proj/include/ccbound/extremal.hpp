#pragma once

/// \file extremal.hpp
/// \brief Witness graphs that attain (or best-known approach) the largest
/// minimum clique cover for given n and m.

#include <string_view>

#include "ccbound/graph.hpp"
#include "ccbound/theta.hpp"

namespace ccb {

enum class Guarantee {
  Proven,          ///< the value is proven maximal and the witness attains it
  OracleVerified,  ///< exhaustive enumeration confirms the witness is maximal
  BestKnown,       ///< no optimality certificate
};

std::string_view to_string(Guarantee g);

struct WitnessResult {
  Graph graph;
  Count claimed_theta = 0;  ///< always recomputed by the solver
  Guarantee guarantee = Guarantee::BestKnown;
};

/// Below the peak: a triangle-free host on the fewest vertices that can hold
/// m edges, padded with singletons. Just past the peak: K_{n/2,n/2} plus a
/// star of edges inside one part. Further right: K_{a,b} joined to universal
/// vertices, with any surplus non-edges taken from one of those vertices.
WitnessResult witness(int n, Count m);

/// Just the graph, without running the solver.
Graph witness_graph(int n, Count m);

}  // namespace ccb
