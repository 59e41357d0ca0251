#include "aec/trace.hpp"

namespace aec {

void replay(PartialColoring& c, const ExtensionTrace& t) {
  for (const auto& ev : t.events) {
    // Clear every touched edge first so exchanges do not clash mid-step.
    for (const auto& [e, col] : ev.changes)
      if (c.is_colored(e)) c.unassign(e);
    for (const auto& [e, col] : ev.changes)
      if (col != 0) c.assign(e, col);
  }
}

const char* to_string(TraceAction a) {
  switch (a) {
    case TraceAction::Assign: return "assign";
    case TraceAction::Exchange: return "exchange";
    case TraceAction::Recolor: return "recolor";
    case TraceAction::Unassign: return "unassign";
  }
  return "?";
}

std::string format_trace(const ExtensionTrace& t) {
  std::string out = "edge " + std::to_string(t.edge);
  if (!t.final_label.empty()) out += " finished by " + t.final_label;
  out += "\n";
  for (const auto& ev : t.events) {
    out += "  [" + ev.label + "] " + to_string(ev.action);
    for (const auto& [e, col] : ev.changes)
      out += " e" + std::to_string(e) + "->" + std::to_string(col);
    out += "\n";
  }
  return out;
}

}  // namespace aec
