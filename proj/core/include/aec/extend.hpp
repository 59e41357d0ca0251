#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/trace.hpp"

namespace aec {

struct ExtendOptions {
  /// Re-verify properness and acyclicity around every trace event and
  /// abort with the full trace on any failure.
  bool checked = false;
};

/// Dispatch context for one edge extension: x is the low endpoint
/// (degree <= 3), shared = F_xy n F_yx, candidates = S, t = palette - 1.
struct ExtensionContext {
  EdgeId xy = -1;
  VertexId x = -1;
  VertexId y = -1;
  int t = 0;
  std::vector<Color> shared;
  std::vector<Color> candidates;
};

ExtensionContext make_extension_context(const PartialColoring& c, EdgeId xy);

/// Raised when no case of the analysis applies; carries the context and the
/// trace of recolorings attempted so far. The input coloring is restored
/// before the throw, so the caller can hand the untouched coloring to
/// fallback_bounded_search.
class CaseStallError : public Error {
 public:
  CaseStallError(std::string label, std::string what, ExtensionTrace trace)
      : Error("case stall at " + label + ": " + what),
        case_label(std::move(label)),
        trace(std::move(trace)) {}
  std::string case_label;
  ExtensionTrace trace;
};

/// Extends an acyclic coloring of G - xy to G within the same palette by
/// the case analysis: try every candidate first, then branch on the size
/// of the shared color set and on whether both endpoints have degree <= 3.
/// Mutates c and returns the replayable trace. Throws CaseStallError when
/// no case applies (the spare-color search is the caller's recourse).
ExtensionTrace extend(PartialColoring& c, EdgeId xy,
                      const ExtendOptions& opts = {});

/// Exhaustive recoloring search over the edges within `radius` of the
/// endpoints of xy (an edge is in the ball when some endpoint is at
/// distance < radius), same palette, looking for any proper acyclic
/// extension. Deterministic ordering; returns nullopt when the ball is
/// exhausted or node_budget runs out.
std::optional<ExtensionTrace> fallback_bounded_search(PartialColoring& c,
                                                      EdgeId xy, int radius = 2,
                                                      long node_budget =
                                                          20'000'000);

}  // namespace aec
