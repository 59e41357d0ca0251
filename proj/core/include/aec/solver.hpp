#pragma once

#include <map>
#include <string>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/extend.hpp"
#include "aec/graph.hpp"
#include "aec/peel.hpp"

namespace aec {

enum class SolveMode { Auto, Theorem, Corollary };

struct SolveOptions {
  SolveMode mode = SolveMode::Auto;
  bool checked = false;
  bool collect_traces = false;
  int fallback_radius = 2;
  long fallback_budget = 20'000'000;
};

struct SolveStats {
  int n = 0;
  int m = 0;
  int delta = 0;
  std::string mode;  // "theorem", "corollary" or "mixed"
  int colors_used = 0;
  long fallback_count = 0;
  std::map<std::string, long> case_histogram;    // final case label -> count
  std::map<std::string, long> fallback_by_case;  // stalled case label -> count
};

struct SolveResult {
  PartialColoring coloring;  // total on the edges of the input graph
  int palette_size = 0;
  SolveStats stats;
  std::vector<ExtensionTrace> traces;  // edge ids refer to the input graph
};

class NotThreeSparseError : public GraphError {
 public:
  NotThreeSparseError(EdgeId e, const std::string& what)
      : GraphError(what), edge(e) {}
  EdgeId edge;
};

class NoQualifyingEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Theorem-mode failure: the bounded search was exhausted or an internal
/// invariant broke. Carries a diagnostics bundle; never raised silently.
class SolveAbortError : public Error {
 public:
  SolveAbortError(const std::string& what, std::string diag)
      : Error(what), diagnostics(std::move(diag)) {}
  std::string diagnostics;
};

/// End-to-end pipeline, per connected component: peel by minimum edge
/// degree, reinsert in reverse order extending the coloring each time.
/// Auto mode picks per component: a qualifying edge means the full
/// peel-and-extend with palette delta+1; otherwise the smallest edge is
/// deleted, the rest is colored the same way, and the deleted edge gets
/// the reserved color delta+2. The output is always verified proper and
/// acyclic before it is returned.
SolveResult acyclic_color(const Graph& g, const SolveOptions& opts = {});
SolveResult acyclic_color(Graph&&, const SolveOptions& = {}) = delete;

/// Number of distinct colors used by c.
int color_count(const PartialColoring& c);

/// Sorted distinct colors used by c.
std::vector<Color> used_palette(const PartialColoring& c);

}  // namespace aec
