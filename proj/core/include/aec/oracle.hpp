#pragma once

#include <functional>
#include <variant>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

struct OracleLimits {
  long node_budget = 200'000'000;
  int max_edges_guard = 18;  // reject larger graphs unless overridden
  bool override_guard = false;
};

struct OracleResult {
  int aci = 0;
  PartialColoring witness;
  long nodes_explored = 0;
};

/// Budget ran out: `lower` is the smallest palette size not yet refuted,
/// `upper` the best known bound (delta+2 for 3-sparse inputs, 0 if unknown).
struct OracleBounds {
  int lower = 0;
  int upper = 0;
  long nodes_explored = 0;
};

/// Exact acyclic chromatic index by iterative deepening from delta up to
/// k_max. For each k, backtracking over edges in reverse peel order with
/// smallest-feasible colors, incremental properness, bichromatic-cycle
/// pruning localized to the newly colored edge, and symmetry breaking: a
/// new color may only be introduced as 1 + the maximum color used so far.
std::variant<OracleResult, OracleBounds> exact_aci(const Graph& g, int k_max,
                                                   const OracleLimits& limits =
                                                       {});
std::variant<OracleResult, OracleBounds> exact_aci(Graph&&, int,
                                                   const OracleLimits& = {}) =
    delete;

/// Enumerates up to `cap` distinct total acyclic colorings with palette k
/// in lexicographic edge/color order (no symmetry breaking). Returns the
/// number emitted.
long all_acyclic_colorings(const Graph& g, int k, long cap,
                           const std::function<void(const PartialColoring&)>&
                               emit);

}  // namespace aec
