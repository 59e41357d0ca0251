#include "aec/solver.hpp"

#include <algorithm>
#include <sstream>

namespace aec {

namespace {

struct LocalResult {
  PartialColoring coloring;
  std::vector<ExtensionTrace> traces;
  long fallback_count = 0;
  std::map<std::string, long> case_histogram;
  std::map<std::string, long> fallback_by_case;
};

int colored_degree(const PartialColoring& c, VertexId v) {
  int d = 0;
  for (const auto& inc : c.graph().incident(v))
    if (c.is_colored(inc.edge)) ++d;
  return d;
}

// Connected graph with max degree <= 2: a path or a cycle. Paths alternate
// two colors; cycles alternate and close with a third.
void color_path_or_cycle(const Graph& h, LocalResult& out) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  bool is_cycle = (m == n);
  VertexId start = 0;
  if (!is_cycle) {
    for (VertexId v = 0; v < n; ++v)
      if (h.degree(v) == 1) {
        start = v;
        break;
      }
  }
  ExtensionTrace trace;
  trace.final_label = is_cycle ? "bypass:cycle" : "bypass:path";

  VertexId cur = start;
  int idx = 0;
  while (true) {
    // The edge we arrived by is already colored, so any uncolored incident
    // edge continues the walk.
    EdgeId next = -1;
    for (const auto& inc : h.incident(cur)) {
      if (!out.coloring.is_colored(inc.edge)) {
        next = inc.edge;
        break;
      }
    }
    if (next == -1) break;
    Color col = (idx % 2) + 1;
    if (is_cycle && idx == m - 1) col = 3;
    out.coloring.assign(next, col);
    TraceEvent ev{trace.final_label, TraceAction::Assign, {{next, col}}, false,
                  false};
    trace.events.push_back(ev);
    cur = h.other_endpoint(next, cur);
    ++idx;
  }
  out.case_histogram[trace.final_label] += m;
  out.traces.push_back(std::move(trace));
}

LocalResult color_theorem(const Graph& h, const SolveOptions& opts) {
  const int delta = h.max_degree();
  const int palette = std::max(2, delta + 1);
  LocalResult out{PartialColoring(h, Palette{palette})};
  if (h.edge_count() == 0) return out;
  if (delta <= 2) {
    color_path_or_cycle(h, out);
    return out;
  }

  PeelResult peel = peel_order(h, delta);
  if (!peel.complete()) {
    std::ostringstream diag;
    diag << "peel stalled with " << peel.residual.size()
         << " residual edges; no edge of edge degree <= " << delta;
    throw SolveAbortError("peel stalled", diag.str());
  }

  ExtendOptions ext_opts;
  ext_opts.checked = opts.checked;
  for (auto it = peel.order.sequence.rbegin(); it != peel.order.sequence.rend();
       ++it) {
    EdgeId e = *it;
    auto [u, v] = h.endpoints(e);
    int insertion_degree = colored_degree(out.coloring, u) +
                           colored_degree(out.coloring, v);
    if (insertion_degree > delta) {
      std::ostringstream diag;
      diag << "edge " << e << " has insertion edge degree " << insertion_degree
           << " > " << delta;
      throw SolveAbortError("reinsertion invariant broken", diag.str());
    }
    ExtensionTrace trace;
    try {
      trace = extend(out.coloring, e, ext_opts);
    } catch (const CaseStallError& stall) {
      ++out.fallback_by_case[stall.case_label];
      auto recovered = fallback_bounded_search(out.coloring, e,
                                               opts.fallback_radius,
                                               opts.fallback_budget);
      if (!recovered.has_value()) {
        std::ostringstream diag;
        diag << "bounded search exhausted after stall at " << stall.case_label
             << " inserting edge " << e << " (" << u << "," << v
             << ")\nattempted recolorings:\n"
             << format_trace(stall.trace) << "uncolored edges remaining:";
        for (EdgeId f = 0; f < h.edge_count(); ++f)
          if (!out.coloring.is_colored(f)) diag << ' ' << f;
        throw SolveAbortError("theorem-mode abort", diag.str());
      }
      if (verify_acyclic(out.coloring).has_value())
        throw SolveAbortError("fallback produced a bichromatic cycle",
                              "edge " + std::to_string(e));
      ++out.fallback_count;
      trace = std::move(*recovered);
      trace.final_label = "fallback:" + stall.case_label;
    }
    ++out.case_histogram[trace.final_label];
    if (opts.collect_traces) out.traces.push_back(std::move(trace));
  }

  if (verify_proper(out.coloring).has_value() ||
      verify_acyclic(out.coloring).has_value())
    throw SolveAbortError("component coloring failed verification",
                          "internal invariant violation");
  return out;
}

void remap_trace(ExtensionTrace& t, const std::vector<EdgeId>& edge_map) {
  if (t.edge >= 0) t.edge = edge_map[t.edge];
  for (auto& ev : t.events)
    for (auto& [e, col] : ev.changes) e = edge_map[e];
}

void merge_local(const LocalResult& local, const std::vector<EdgeId>& edge_map,
                 PartialColoring& global, SolveResult& result,
                 const SolveOptions& opts) {
  for (EdgeId e = 0; e < local.coloring.graph().edge_count(); ++e)
    if (local.coloring.is_colored(e))
      global.assign(edge_map[e], local.coloring.color(e));
  result.stats.fallback_count += local.fallback_count;
  for (const auto& [k, v] : local.case_histogram)
    result.stats.case_histogram[k] += v;
  for (const auto& [k, v] : local.fallback_by_case)
    result.stats.fallback_by_case[k] += v;
  if (opts.collect_traces) {
    for (auto t : local.traces) {
      remap_trace(t, edge_map);
      result.traces.push_back(std::move(t));
    }
  }
}

std::vector<EdgeId> compose(const std::vector<EdgeId>& inner,
                            const std::vector<EdgeId>& outer) {
  std::vector<EdgeId> out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

SolveResult acyclic_color(const Graph& g, const SolveOptions& opts) {
  if (auto bad = find_three_sparse_violation(g))
    throw NotThreeSparseError(*bad,
                              "graph is not 3-sparse: edge " +
                                  std::to_string(*bad) +
                                  " has both endpoints of degree > 3");

  const int delta = g.max_degree();
  auto components = connected_components(g);

  // Route every component first so the global palette is known up front.
  std::vector<int> route(components.size(), 0);  // 0 trivial, 1 theorem, 2 cor.
  for (size_t i = 0; i < components.size(); ++i) {
    const Graph& h = components[i].graph;
    if (h.edge_count() == 0) continue;
    bool qualifying = find_qualifying_edge(h).has_value();
    switch (opts.mode) {
      case SolveMode::Auto:
        route[i] = qualifying ? 1 : 2;
        break;
      case SolveMode::Theorem:
        if (!qualifying)
          throw NoQualifyingEdgeError(
              "theorem mode requires an edge xy with d(x)+d(y) < delta+3 in "
              "every component");
        route[i] = 1;
        break;
      case SolveMode::Corollary:
        route[i] = 2;
        break;
    }
  }

  bool any_theorem = false, any_corollary = false;
  for (int r : route) {
    if (r == 1) any_theorem = true;
    if (r == 2) any_corollary = true;
  }
  const int palette = std::max(1, delta + (any_corollary ? 2 : 1));

  SolveResult result{PartialColoring(g, Palette{palette})};
  result.palette_size = palette;
  result.stats.n = g.vertex_count();
  result.stats.m = g.edge_count();
  result.stats.delta = delta;
  result.stats.mode = any_corollary ? (any_theorem ? "mixed" : "corollary")
                                    : "theorem";

  for (size_t i = 0; i < components.size(); ++i) {
    const Component& comp = components[i];
    if (route[i] == 0) continue;
    if (route[i] == 1) {
      LocalResult local = color_theorem(comp.graph, opts);
      merge_local(local, comp.edge_to_parent, result.coloring, result, opts);
      continue;
    }
    // Corollary route: pull out the smallest-id edge, color the rest with
    // the peel-and-extend pipeline, then give the deleted edge the reserved
    // color delta+2 (a fresh color cannot lie on a bichromatic cycle).
    const Graph& h = comp.graph;
    std::vector<std::pair<int, int>> rest(h.edges().begin() + 1,
                                          h.edges().end());
    Graph reduced = Graph::build(h.vertex_count(), rest);
    std::vector<EdgeId> reduced_to_comp(reduced.edge_count());
    for (EdgeId e = 0; e < reduced.edge_count(); ++e)
      reduced_to_comp[e] = e + 1;

    for (const Component& sub : connected_components(reduced)) {
      if (sub.graph.edge_count() == 0) continue;
      LocalResult local = color_theorem(sub.graph, opts);
      auto to_parent = compose(compose(sub.edge_to_parent, reduced_to_comp),
                               comp.edge_to_parent);
      merge_local(local, to_parent, result.coloring, result, opts);
    }

    EdgeId reserved = comp.edge_to_parent[0];
    result.coloring.assign(reserved, delta + 2);
    ++result.stats.case_histogram["corollary:reserved"];
    if (opts.collect_traces) {
      ExtensionTrace t;
      t.edge = reserved;
      t.final_label = "corollary:reserved";
      t.events.push_back(TraceEvent{"corollary:reserved", TraceAction::Assign,
                                    {{reserved, delta + 2}}, false, false});
      result.traces.push_back(std::move(t));
    }
  }

  if (verify_proper(result.coloring).has_value() ||
      verify_acyclic(result.coloring).has_value())
    throw SolveAbortError("final coloring failed verification",
                          "internal invariant violation");
  result.stats.colors_used = color_count(result.coloring);
  return result;
}

int color_count(const PartialColoring& c) {
  return static_cast<int>(used_palette(c).size());
}

std::vector<Color> used_palette(const PartialColoring& c) {
  std::vector<bool> seen(c.palette().size + 1, false);
  for (EdgeId e = 0; e < c.graph().edge_count(); ++e)
    if (c.color(e) != 0) seen[c.color(e)] = true;
  std::vector<Color> out;
  for (Color col = 1; col <= c.palette().size; ++col)
    if (seen[col]) out.push_back(col);
  return out;
}

}  // namespace aec
