#pragma once

#include <vector>

#include "aec/graph.hpp"

namespace aec {

/// Edges removed by minimum-edge-degree peeling, with the residual edge
/// degree observed at each removal. Reversed, the sequence is the solver's
/// reinsertion order.
struct PeelOrder {
  std::vector<EdgeId> sequence;
  std::vector<int> residual_edge_degrees;
};

struct PeelResult {
  PeelOrder order;
  std::vector<EdgeId> residual;  // nonempty iff the peel stalled
  bool complete() const { return residual.empty(); }
};

/// Repeatedly removes an edge of minimum residual edge degree while that
/// minimum is <= k, breaking ties by smallest edge id. A 3-sparse connected
/// graph with an edge of edge degree <= max_degree peels completely at
/// k = max_degree; a stall reports the residual edge set and signals the
/// caller to take the spare-color route.
PeelResult peel_order(const Graph& g, int k);

}  // namespace aec
