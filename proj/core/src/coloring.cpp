#include "aec/coloring.hpp"

#include <algorithm>
#include <string>

namespace aec {

PartialColoring::PartialColoring(const Graph& g, Palette p)
    : graph_(&g), palette_(p), colors_(g.edge_count(), 0) {
  if (p.size < 1) throw ColoringError("palette size must be >= 1");
  index_.assign(g.vertex_count(), std::vector<EdgeId>(p.size + 1, -1));
}

void PartialColoring::assign(EdgeId e, Color c) {
  if (e < 0 || e >= graph_->edge_count())
    throw ColoringError("unknown edge id " + std::to_string(e));
  if (colors_[e] != 0)
    throw ColoringError("edge " + std::to_string(e) + " is already colored");
  if (c < 1 || c > palette_.size)
    throw ColoringError("color " + std::to_string(c) + " outside palette 1.." +
                        std::to_string(palette_.size));
  auto [u, v] = graph_->endpoints(e);
  for (VertexId w : {u, v}) {
    EdgeId clash = index_[w][c];
    if (clash != -1)
      throw ColoringError("color " + std::to_string(c) + " clashes at vertex " +
                          std::to_string(w) + " with edge " +
                          std::to_string(clash));
  }
  colors_[e] = c;
  index_[u][c] = e;
  index_[v][c] = e;
  ++colored_count_;
}

void PartialColoring::unassign(EdgeId e) {
  if (e < 0 || e >= graph_->edge_count())
    throw ColoringError("unknown edge id " + std::to_string(e));
  Color c = colors_[e];
  if (c == 0)
    throw ColoringError("edge " + std::to_string(e) + " is not colored");
  auto [u, v] = graph_->endpoints(e);
  colors_[e] = 0;
  index_[u][c] = -1;
  index_[v][c] = -1;
  --colored_count_;
}

void PartialColoring::recolor(EdgeId e, Color c) {
  Color old = color(e);
  if (old == 0)
    throw ColoringError("recolor requires a colored edge");
  unassign(e);
  try {
    assign(e, c);
  } catch (...) {
    assign(e, old);
    throw;
  }
}

void PartialColoring::exchange(VertexId w, EdgeId e1, EdgeId e2) {
  if (!graph_->is_endpoint(e1, w) || !graph_->is_endpoint(e2, w))
    throw ColoringError("exchange edges must share vertex " + std::to_string(w));
  Color c1 = color(e1);
  Color c2 = color(e2);
  if (c1 == 0 || c2 == 0)
    throw ColoringError("exchange requires both edges colored");
  if (c1 == c2)
    throw ColoringError("exchange of equal colors is improper at vertex " +
                        std::to_string(w));
  unassign(e1);
  unassign(e2);
  try {
    assign(e1, c2);
    assign(e2, c1);
  } catch (...) {
    if (colors_[e1] != 0) unassign(e1);
    if (colors_[e2] != 0) unassign(e2);
    assign(e1, c1);
    assign(e2, c2);
    throw;
  }
}

EdgeId PartialColoring::edge_with_color(VertexId v, Color c) const {
  if (c < 1 || c > palette_.size) return -1;
  return index_.at(v)[c];
}

std::vector<Color> PartialColoring::colors_at(VertexId v) const {
  std::vector<Color> out;
  for (Color c = 1; c <= palette_.size; ++c)
    if (index_.at(v)[c] != -1) out.push_back(c);
  return out;
}

std::vector<Color> PartialColoring::colors_at_excluding(VertexId v,
                                                        EdgeId e) const {
  std::vector<Color> out;
  for (Color c = 1; c <= palette_.size; ++c) {
    EdgeId at = index_.at(v)[c];
    if (at != -1 && at != e) out.push_back(c);
  }
  return out;
}

std::vector<Color> candidate_colors(const PartialColoring& c, EdgeId e) {
  if (c.is_colored(e))
    throw ColoringError("candidate colors are defined for uncolored edges");
  auto [x, y] = c.graph().endpoints(e);
  std::vector<Color> out;
  for (Color col = 1; col <= c.palette().size; ++col)
    if (!c.has_color_at(x, col) && !c.has_color_at(y, col)) out.push_back(col);
  return out;
}

namespace {

BichromaticCycle canonical_cycle(std::vector<VertexId> vs,
                                 std::vector<EdgeId> es,
                                 std::pair<Color, Color> colors) {
  const int n = static_cast<int>(vs.size());
  int p = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  BichromaticCycle cyc;
  cyc.colors = colors;
  cyc.vertices.resize(n);
  cyc.edges.resize(n);
  bool forward = vs[(p + 1) % n] <= vs[(p - 1 + n) % n];
  for (int i = 0; i < n; ++i) {
    if (forward) {
      cyc.vertices[i] = vs[(p + i) % n];
      cyc.edges[i] = es[(p + i) % n];
    } else {
      cyc.vertices[i] = vs[(p - i + n) % n];
      cyc.edges[i] = es[(p - 1 - i + n) % n];
    }
  }
  return cyc;
}

// One leg of a bichromatic walk. Appends (edge, vertex) steps; returns true
// when the walk closed back on `origin`.
bool walk_leg(const PartialColoring& c, VertexId origin, VertexId from,
              Color want_first, Color other,
              std::vector<VertexId>& vertices, std::vector<EdgeId>& edges) {
  VertexId cur = from;
  Color want = want_first;
  int guard = c.graph().edge_count() + 1;
  while (guard-- > 0) {
    EdgeId e = c.edge_with_color(cur, want);
    if (e == -1) return false;
    VertexId nxt = c.graph().other_endpoint(e, cur);
    edges.push_back(e);
    if (nxt == origin) return true;
    vertices.push_back(nxt);
    cur = nxt;
    want = (want == want_first) ? other : want_first;
  }
  throw ColoringError("bichromatic walk exceeded edge count; coloring corrupt");
}

}  // namespace

WalkResult max_bichromatic_path(const PartialColoring& c, VertexId start,
                                Color first_color, Color second_color) {
  std::vector<VertexId> fwd_vertices;
  std::vector<EdgeId> fwd_edges;
  bool closed = walk_leg(c, start, start, first_color, second_color,
                         fwd_vertices, fwd_edges);
  if (closed) {
    std::vector<VertexId> vs;
    vs.push_back(start);
    vs.insert(vs.end(), fwd_vertices.begin(), fwd_vertices.end());
    return canonical_cycle(std::move(vs), std::move(fwd_edges),
                           {first_color, second_color});
  }
  std::vector<VertexId> bwd_vertices;
  std::vector<EdgeId> bwd_edges;
  walk_leg(c, start, start, second_color, first_color, bwd_vertices, bwd_edges);

  BichromaticPath path;
  path.colors = {first_color, second_color};
  path.vertices.assign(bwd_vertices.rbegin(), bwd_vertices.rend());
  path.vertices.push_back(start);
  path.vertices.insert(path.vertices.end(), fwd_vertices.begin(),
                       fwd_vertices.end());
  path.edges.assign(bwd_edges.rbegin(), bwd_edges.rend());
  path.edges.insert(path.edges.end(), fwd_edges.begin(), fwd_edges.end());
  return path;
}

bool critical_path_exists(const PartialColoring& c, Color alpha, Color beta,
                          VertexId x, VertexId y) {
  // A maximal path starts at x only when x has no beta edge.
  if (c.edge_with_color(x, beta) != -1) return false;
  EdgeId e = c.edge_with_color(x, alpha);
  if (e == -1) return false;
  VertexId cur = c.graph().other_endpoint(e, x);
  Color last = alpha;
  int guard = c.graph().edge_count() + 1;
  while (guard-- > 0) {
    Color want = (last == alpha) ? beta : alpha;
    EdgeId next = c.edge_with_color(cur, want);
    if (next == -1) break;
    cur = c.graph().other_endpoint(next, cur);
    last = want;
  }
  if (guard < 0)
    throw ColoringError("critical-path walk exceeded edge count");
  return cur == y && last == alpha;
}

bool is_valid_color(const PartialColoring& c, EdgeId e, Color beta) {
  auto candidates = candidate_colors(c, e);
  if (!std::binary_search(candidates.begin(), candidates.end(), beta))
    throw ColoringError("color " + std::to_string(beta) +
                        " is not a candidate for edge " + std::to_string(e));
  auto [x, y] = c.graph().endpoints(e);
  auto fx = c.colors_at(x);
  for (Color alpha : c.colors_at(y)) {
    if (!std::binary_search(fx.begin(), fx.end(), alpha)) continue;
    if (critical_path_exists(c, alpha, beta, x, y)) return false;
  }
  return true;
}

bool is_valid_color_direct(const PartialColoring& c, EdgeId e, Color beta) {
  auto candidates = candidate_colors(c, e);
  if (!std::binary_search(candidates.begin(), candidates.end(), beta))
    throw ColoringError("color " + std::to_string(beta) +
                        " is not a candidate for edge " + std::to_string(e));
  PartialColoring trial = c;
  trial.assign(e, beta);
  return !verify_acyclic(trial).has_value();
}

std::optional<ProperViolation> verify_proper(const PartialColoring& c) {
  const Graph& g = c.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<EdgeId> first_of(c.palette().size + 1, -1);
    for (const auto& inc : g.incident(v)) {
      Color col = c.color(inc.edge);
      if (col == 0) continue;
      if (first_of[col] != -1)
        return ProperViolation{v, first_of[col], inc.edge, col};
      first_of[col] = inc.edge;
    }
  }
  return std::nullopt;
}

std::optional<BichromaticCycle> verify_acyclic(const PartialColoring& c) {
  if (verify_proper(c).has_value())
    throw ColoringError("verify_acyclic requires a proper coloring");
  const Graph& g = c.graph();
  const int k = c.palette().size;

  std::vector<std::vector<EdgeId>> by_color(k + 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (c.color(e) != 0) by_color[c.color(e)].push_back(e);

  std::vector<bool> visited(g.edge_count(), false);
  for (Color a = 1; a <= k; ++a) {
    if (by_color[a].empty()) continue;
    for (Color b = a + 1; b <= k; ++b) {
      if (by_color[b].empty()) continue;
      for (EdgeId seed : by_color[a]) visited[seed] = false;
      for (EdgeId seed : by_color[b]) visited[seed] = false;
      for (EdgeId seed : by_color[a]) {
        if (visited[seed]) continue;
        // Trace the (a,b)-component containing seed; it is a path or cycle.
        auto [u, v] = g.endpoints(seed);
        visited[seed] = true;
        std::vector<VertexId> vs{u, v};
        std::vector<EdgeId> es{seed};
        VertexId cur = v;
        Color last = a;
        bool cycle = false;
        while (true) {
          Color want = (last == a) ? b : a;
          EdgeId e = c.edge_with_color(cur, want);
          if (e == -1) break;
          visited[e] = true;
          cur = g.other_endpoint(e, cur);
          last = want;
          es.push_back(e);
          if (cur == u) {
            cycle = true;
            break;
          }
          vs.push_back(cur);
        }
        if (cycle)
          return canonical_cycle(std::move(vs), std::move(es), {a, b});
        // Extend from the u side to consume the rest of the component.
        cur = u;
        last = a;
        while (true) {
          Color want = (last == a) ? b : a;
          EdgeId e = c.edge_with_color(cur, want);
          if (e == -1) break;
          visited[e] = true;
          cur = g.other_endpoint(e, cur);
          last = want;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace aec
