#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aec/coloring.hpp"

namespace aec {

enum class TraceAction { Assign, Exchange, Recolor, Unassign };

/// One recoloring step of an edge extension, keyed to the case label that
/// produced it (e.g. "b.2:g2", "lemma-ge3:2.3:f3"). `changes` holds the
/// post-state of every touched edge (color 0 = uncolored), so replaying a
/// trace is forward-only.
struct TraceEvent {
  std::string label;
  TraceAction action;
  std::vector<std::pair<EdgeId, Color>> changes;
  bool pre_checked = false;   // pre-state verified proper+acyclic
  bool post_checked = false;  // post-state verified proper+acyclic
};

struct ExtensionTrace {
  EdgeId edge = -1;
  std::vector<TraceEvent> events;
  /// Label of the event that completed the extension, empty if none did.
  std::string final_label;
};

/// Applies the events of `t` to `c` in order. Replaying a trace on the
/// coloring it was recorded from reproduces the output coloring exactly.
void replay(PartialColoring& c, const ExtensionTrace& t);

const char* to_string(TraceAction a);

/// One line per event, for diagnostics bundles and logs.
std::string format_trace(const ExtensionTrace& t);

}  // namespace aec
