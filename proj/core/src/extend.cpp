#include "aec/extend.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace aec {

namespace {

bool contains(const std::vector<Color>& sorted, Color c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

std::vector<Color> intersect(const std::vector<Color>& a,
                             const std::vector<Color>& b) {
  std::vector<Color> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// The extension works on the graph formed by the colored edges plus xy;
// uncolored edges other than xy are treated as absent. That is exactly the
// reinsertion state the solver maintains.
class Extender {
 public:
  Extender(PartialColoring& c, EdgeId xy, const ExtendOptions& opts)
      : c_(c), g_(c.graph()), xy_(xy), opts_(opts), snapshot_(c) {
    auto [u, v] = g_.endpoints(xy);
    if (c_.is_colored(xy))
      throw ColoringError("extend target edge is already colored");
    // x is the endpoint with smaller degree in the current graph.
    if (std::pair(cur_degree(u), u) <= std::pair(cur_degree(v), v)) {
      x_ = u;
      y_ = v;
    } else {
      x_ = v;
      y_ = u;
    }
    if (cur_degree(x_) > 3)
      throw ColoringError(
          "no endpoint of the extension edge has degree <= 3; graph is not "
          "3-sparse");
    t_ = c_.palette().size - 1;
    trace_.edge = xy_;
  }

  ExtensionTrace run() {
    dispatch();
    return std::move(trace_);
  }

 private:
  PartialColoring& c_;
  const Graph& g_;
  EdgeId xy_;
  VertexId x_ = -1, y_ = -1;
  int t_ = 0;
  ExtendOptions opts_;
  ExtensionTrace trace_;
  PartialColoring snapshot_;
  bool done_ = false;

  // ---- current-graph views -------------------------------------------

  int cur_degree(VertexId v) const {
    int d = 0;
    for (const auto& inc : g_.incident(v))
      if (inc.edge == xy_ || c_.is_colored(inc.edge)) ++d;
    return d;
  }

  // Colored neighbors of v, ordered by neighbor id.
  std::vector<Incidence> colored_neighbors(VertexId v) const {
    std::vector<Incidence> out;
    for (const auto& inc : g_.incident(v))
      if (c_.is_colored(inc.edge)) out.push_back(inc);
    std::sort(out.begin(), out.end(),
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
    return out;
  }

  std::vector<Color> shared_colors() const {
    return intersect(c_.colors_at(x_), c_.colors_at(y_));
  }

  std::vector<Color> F_excl(VertexId v, EdgeId e) const {
    return c_.colors_at_excluding(v, e);
  }

  bool in_F(VertexId v, EdgeId e, Color col) const {
    EdgeId at = c_.edge_with_color(v, col);
    return at != -1 && at != e;
  }

  bool is_candidate(EdgeId e, Color col) const {
    auto [u, v] = g_.endpoints(e);
    return col >= 1 && col <= c_.palette().size && !c_.has_color_at(u, col) &&
           !c_.has_color_at(v, col);
  }

  // ---- trace plumbing -------------------------------------------------

  [[noreturn]] void stall(const std::string& label, const std::string& what) {
    c_ = snapshot_;
    throw CaseStallError(label, what, std::move(trace_));
  }

  bool state_ok() const {
    return !verify_proper(c_).has_value() && !verify_acyclic(c_).has_value();
  }

  void record(TraceAction action, std::vector<std::pair<EdgeId, Color>> changes,
              const std::string& label, bool pre_checked) {
    TraceEvent ev{label, action, std::move(changes), pre_checked, false};
    if (opts_.checked) {
      ev.post_checked = state_ok();
      trace_.events.push_back(ev);
      if (!ev.post_checked)
        stall(label, "checked mode: state invalid after event");
    } else {
      trace_.events.push_back(std::move(ev));
    }
  }

  // Applies an edge->color update set (properness enforced), then requires
  // the result to stay acyclic. Rolls back and returns false otherwise.
  bool try_recolor_set(const std::vector<std::pair<EdgeId, Color>>& changes,
                       TraceAction action, const std::string& label) {
    bool pre_checked = opts_.checked && state_ok();
    std::vector<std::pair<EdgeId, Color>> prev;
    prev.reserve(changes.size());
    for (const auto& [e, col] : changes) prev.emplace_back(e, c_.color(e));
    auto rollback = [&] {
      for (const auto& [e, col] : changes)
        if (c_.is_colored(e)) c_.unassign(e);
      for (const auto& [e, col] : prev)
        if (col != 0) c_.assign(e, col);
    };
    try {
      for (const auto& [e, col] : changes)
        if (c_.is_colored(e)) c_.unassign(e);
      for (const auto& [e, col] : changes)
        if (col != 0) c_.assign(e, col);
    } catch (const ColoringError&) {
      rollback();
      return false;
    }
    if (verify_acyclic(c_).has_value()) {
      rollback();
      return false;
    }
    record(action, changes, label, pre_checked);
    return true;
  }

  void recolor_set_or_stall(const std::vector<std::pair<EdgeId, Color>>& changes,
                            TraceAction action, const std::string& label) {
    if (!try_recolor_set(changes, action, label))
      stall(label, "recoloring expected to be valid was not");
  }

  // Single-edge recoloring decided by the exact validity criterion.
  bool try_recolor_edge(EdgeId e, Color col, const std::string& label) {
    bool pre_checked = opts_.checked && state_ok();
    Color old = c_.color(e);
    c_.unassign(e);
    bool ok = is_candidate(e, col) && is_valid_color(c_, e, col);
    if (!ok) {
      c_.assign(e, old);
      return false;
    }
    c_.assign(e, col);
    record(TraceAction::Recolor, {{e, col}}, label, pre_checked);
    return true;
  }

  void recolor_edge_or_stall(EdgeId e, Color col, const std::string& label) {
    if (!try_recolor_edge(e, col, label))
      stall(label, "single-edge recoloring expected to be valid was not");
  }

  void finish(Color col, const std::string& label) {
    if (!is_candidate(xy_, col) || !is_valid_color(c_, xy_, col))
      stall(label, "final color " + std::to_string(col) + " is not valid");
    bool pre_checked = opts_.checked && state_ok();
    c_.assign(xy_, col);
    record(TraceAction::Assign, {{xy_, col}}, label, pre_checked);
    trace_.final_label = label;
    done_ = true;
  }

  void finish_first_valid(const std::vector<Color>& choices,
                          const std::string& label) {
    for (Color col : choices) {
      if (is_candidate(xy_, col) && is_valid_color(c_, xy_, col)) {
        finish(col, label);
        return;
      }
    }
    stall(label, "none of the announced colors is valid");
  }

  bool try_all_candidates(const std::string& label) {
    for (Color col : candidate_colors(c_, xy_)) {
      if (is_valid_color(c_, xy_, col)) {
        finish(col, label);
        return true;
      }
    }
    return false;
  }

  // ---- dispatch -------------------------------------------------------

  void dispatch() {
    auto sh = shared_colors();
    if (try_all_candidates(sh.empty() ? "a" : "direct")) return;
    if (sh.empty())
      stall("a", "empty shared set but no candidate is valid");
    if (cur_degree(y_) <= 3) {
      both_low();
      return;
    }
    if (sh.size() == 1)
      case_b(sh[0]);
    else if (sh.size() == 2)
      case_c();
    else
      stall("dispatch", "shared set larger than 2");
  }

  // ---- both endpoints of degree <= 3 ----------------------------------

  void both_low() {
    for (int round = 0; round < 8; ++round) {
      if (round > 0 && try_all_candidates("lemma-ge3:reduce")) return;
      auto sh = shared_colors();
      if (sh.empty())
        stall("lemma-ge3:1", "empty shared set but no candidate is valid");
      if (sh.size() == 1) {
        if (case3(sh[0])) return;
        continue;  // reduced to the two-shared-colors case
      }
      if (sh.size() == 2) {
        case2(sh[0], sh[1]);
        return;
      }
      stall("lemma-ge3", "shared set larger than 2 with both degrees <= 3");
    }
    stall("lemma-ge3", "case reduction did not terminate");
  }

  struct SharedPair {
    Color c1, c2;
    EdgeId xx1, xx2, yy1, yy2;
    VertexId x1, x2, y1, y2;
  };

  SharedPair locate_pair(Color c1, Color c2) const {
    SharedPair p;
    p.c1 = c1;
    p.c2 = c2;
    p.xx1 = c_.edge_with_color(x_, c1);
    p.xx2 = c_.edge_with_color(x_, c2);
    p.yy1 = c_.edge_with_color(y_, c1);
    p.yy2 = c_.edge_with_color(y_, c2);
    p.x1 = g_.other_endpoint(p.xx1, x_);
    p.x2 = g_.other_endpoint(p.xx2, x_);
    p.y1 = g_.other_endpoint(p.yy1, y_);
    p.y2 = g_.other_endpoint(p.yy2, y_);
    return p;
  }

  void case2(Color c1, Color c2) {
    SharedPair p = locate_pair(c1, c2);
    bool one_at_y2 = in_F(p.y2, p.yy2, p.c1);
    bool two_at_y1 = in_F(p.y1, p.yy1, p.c2);
    if (one_at_y2 && two_at_y1) {
      case2_1(p);
    } else if (!one_at_y2 && !two_at_y1) {
      case2_3(p);
    } else {
      if (!one_at_y2) {
        // Mirror image: swap the two shared colors and both vertex pairs.
        std::swap(p.c1, p.c2);
        std::swap(p.xx1, p.xx2);
        std::swap(p.yy1, p.yy2);
        std::swap(p.x1, p.x2);
        std::swap(p.y1, p.y2);
      }
      case2_2(p);
    }
  }

  void case2_1(const SharedPair& p) {
    auto S = candidate_colors(c_, xy_);
    Color mu_i = 0, mu_j = 0;
    for (Color col : S)
      if (!in_F(p.y1, p.yy1, col)) {
        mu_i = col;
        break;
      }
    for (Color col : S)
      if (!in_F(p.y2, p.yy2, col)) {
        mu_j = col;
        break;
      }
    if (mu_i == 0 || mu_j == 0)
      stall("lemma-ge3:2.1", "expected candidates missing from F-sets");
    recolor_edge_or_stall(p.yy1, mu_i, "lemma-ge3:2.1:f0");
    finish(mu_j, "lemma-ge3:2.1:f0");
  }

  void case2_2(const SharedPair& p) {
    auto S = candidate_colors(c_, xy_);
    Color mu_i = 0;
    for (Color col : S)
      if (!in_F(p.y2, p.yy2, col)) {
        mu_i = col;
        break;
      }
    if (mu_i == 0) stall("lemma-ge3:2.2", "no candidate outside F_yy2");
    recolor_edge_or_stall(p.yy2, mu_i, "lemma-ge3:2.2:f0");
    if (try_all_candidates("lemma-ge3:2.2:f0")) return;

    // All candidates critical through x1: F_xx1 must be exactly S.
    auto fxx1 = F_excl(p.x1, p.xx1);
    if (fxx1 != S)
      stall("lemma-ge3:2.2", "F_xx1 != S after failed f0 attempt");

    if (!in_F(p.x2, p.xx2, p.c1)) {
      recolor_edge_or_stall(p.yy2, p.c2, "lemma-ge3:2.2:f0-undo");
      recolor_set_or_stall({{p.xx1, p.c2}, {p.xx2, p.c1}},
                           TraceAction::Exchange, "lemma-ge3:2.2:f1");
      finish(mu_i, "lemma-ge3:2.2:f1");
      return;
    }
    Color mu_j = 0;
    for (Color col : S)
      if (!in_F(p.x2, p.xx2, col)) {
        mu_j = col;
        break;
      }
    if (mu_j == 0) stall("lemma-ge3:2.2", "no candidate outside F_xx2");
    recolor_edge_or_stall(p.xx2, mu_j, "lemma-ge3:2.2:f2");
    finish(p.c2, "lemma-ge3:2.2:f2");
  }

  void case2_3(const SharedPair& p) {
    auto S = candidate_colors(c_, xy_);
    recolor_set_or_stall({{p.yy1, p.c2}, {p.yy2, p.c1}}, TraceAction::Exchange,
                         "lemma-ge3:2.3:f0");
    if (try_all_candidates("lemma-ge3:2.3:f0")) return;

    // Counting claim, asserted by walking: every candidate is blocked in g
    // through one of the two shared colors, and the blocked paths saturate
    // both x-side neighbors.
    recolor_set_or_stall({{p.yy1, p.c1}, {p.yy2, p.c2}}, TraceAction::Exchange,
                         "lemma-ge3:2.3:f0-undo");
    for (Color col : S) {
      if (!critical_path_exists(c_, p.c1, col, x_, y_) &&
          !critical_path_exists(c_, p.c2, col, x_, y_))
        stall("lemma-ge3:2.3",
              "no critical path blocks candidate " + std::to_string(col));
    }
    if (F_excl(p.x1, p.xx1) != S || F_excl(p.x2, p.xx2) != S)
      stall("lemma-ge3:2.3", "F_xx1 or F_xx2 differs from S");

    recolor_set_or_stall({{p.xx1, p.c2}, {p.xx2, p.c1}}, TraceAction::Exchange,
                         "lemma-ge3:2.3:f1");
    if (try_all_candidates("lemma-ge3:2.3:f1")) return;

    recolor_set_or_stall({{p.yy1, p.c2}, {p.yy2, p.c1}}, TraceAction::Exchange,
                         "lemma-ge3:2.3:f2");
    if (try_all_candidates("lemma-ge3:2.3:f2")) return;

    recolor_set_or_stall({{p.yy1, p.c1}, {p.yy2, p.c2}, {p.xx1, p.c1},
                          {p.xx2, p.c2}},
                         TraceAction::Exchange, "lemma-ge3:2.3:f2-undo");

    // Second claim: y1 and y2 carry all of S and each of their other
    // neighbors sees exactly {c1, c2}.
    if (F_excl(p.y1, p.yy1) != S || F_excl(p.y2, p.yy2) != S)
      stall("lemma-ge3:2.3", "F_yy1 or F_yy2 differs from S");
    for (VertexId w : {p.y1, p.y2}) {
      for (const auto& inc : colored_neighbors(w)) {
        if (inc.neighbor == y_) continue;
        std::vector<Color> expect{p.c1, p.c2};
        if (F_excl(inc.neighbor, inc.edge) != expect)
          stall("lemma-ge3:2.3", "neighbor color claim failed at vertex " +
                                     std::to_string(inc.neighbor));
      }
    }

    if (S.size() < 2)
      stall("lemma-ge3:2.3:f3", "double exchange needs two candidates");
    Color mu1 = S[0], mu2 = S[1];
    EdgeId y1a = c_.edge_with_color(p.y1, mu1);
    EdgeId y1b = c_.edge_with_color(p.y1, mu2);
    EdgeId y2a = c_.edge_with_color(p.y2, mu1);
    EdgeId y2b = c_.edge_with_color(p.y2, mu2);
    recolor_set_or_stall(
        {{y1a, mu2}, {y1b, mu1}, {y2a, mu2}, {y2b, mu1}},
        TraceAction::Exchange, "lemma-ge3:2.3:f3");
    finish_first_valid({mu1, mu2}, "lemma-ge3:2.3:f3");
  }

  // Returns true when the extension completed, false when the problem was
  // reduced to the two-shared-colors case.
  bool case3(Color alpha) {
    int dx = cur_degree(x_);
    int dy = cur_degree(y_);
    if (dx == 2 && dy == 2) {
      EdgeId yy1 = c_.edge_with_color(y_, alpha);
      VertexId y1 = g_.other_endpoint(yy1, y_);
      for (Color col = 1; col <= c_.palette().size; ++col) {
        if (c_.has_color_at(x_, col) || c_.has_color_at(y_, col)) continue;
        if (in_F(y1, yy1, col)) continue;
        finish(col, "lemma-ge3:3:deg2");
        return true;
      }
      stall("lemma-ge3:3:deg2", "no color outside the three F-sets");
    }
    if (dx == 2) return case3_deg23(alpha);
    return case3_deg33(alpha);
  }

  bool case3_deg23(Color alpha) {
    EdgeId yy1 = c_.edge_with_color(y_, alpha);
    EdgeId yy2 = -1;
    for (const auto& inc : colored_neighbors(y_))
      if (inc.edge != yy1) yy2 = inc.edge;
    if (yy2 == -1) stall("lemma-ge3:3", "degree-3 endpoint lost its second edge");
    VertexId y2 = g_.other_endpoint(yy2, y_);
    Color c2 = c_.color(yy2);

    auto S = candidate_colors(c_, xy_);
    for (Color col : S) {
      if (!in_F(y2, yy2, col)) {
        recolor_edge_or_stall(yy2, col, "lemma-ge3:3:c");
        finish(c2, "lemma-ge3:3:c");
        return true;
      }
    }
    // F_yy2 holds all of S, hence alpha is absent there.
    recolor_set_or_stall({{yy1, c2}, {yy2, alpha}}, TraceAction::Exchange,
                         "lemma-ge3:3:cprime");
    finish_first_valid(S, "lemma-ge3:3:cprime");
    return true;
  }

  bool case3_deg33(Color alpha) {
    EdgeId yy1 = c_.edge_with_color(y_, alpha);
    EdgeId xx1 = c_.edge_with_color(x_, alpha);
    VertexId y1 = g_.other_endpoint(yy1, y_);
    VertexId x1 = g_.other_endpoint(xx1, x_);
    EdgeId yy2 = -1, xx2 = -1;
    for (const auto& inc : colored_neighbors(y_))
      if (inc.edge != yy1) yy2 = inc.edge;
    for (const auto& inc : colored_neighbors(x_))
      if (inc.edge != xx1) xx2 = inc.edge;
    if (yy2 == -1 || xx2 == -1)
      stall("lemma-ge3:3", "missing second colored edge at a degree-3 endpoint");
    VertexId y2 = g_.other_endpoint(yy2, y_);
    VertexId x2 = g_.other_endpoint(xx2, x_);
    Color c2 = c_.color(yy2);
    Color c3 = c_.color(xx2);

    auto S = candidate_colors(c_, xy_);
    for (Color col : S)
      if (!in_F(y1, yy1, col) || !in_F(x1, xx1, col))
        stall("lemma-ge3:3", "candidate " + std::to_string(col) +
                                 " missing from F_yy1 or F_xx1");

    if (in_F(y1, yy1, c2)) {
      // ---- subcase 3.1 ------------------------------------------------
      if (!in_F(y2, yy2, c3)) {
        recolor_edge_or_stall(yy2, c3, "lemma-ge3:3.1:h1");
        return false;
      }
      if (!in_F(y2, yy2, alpha)) {
        recolor_set_or_stall({{yy1, c3}, {yy2, alpha}}, TraceAction::Recolor,
                             "lemma-ge3:3.1:h2");
        return false;
      }
      Color mu_i = 0;
      for (Color col : S)
        if (!in_F(y2, yy2, col)) {
          mu_i = col;
          break;
        }
      if (mu_i == 0) stall("lemma-ge3:3.1", "no candidate outside F_yy2");
      recolor_edge_or_stall(yy2, mu_i, "lemma-ge3:3.1:h3");
      if (is_candidate(xy_, c2) && is_valid_color(c_, xy_, c2)) {
        finish(c2, "lemma-ge3:3.1:h3");
        return true;
      }
      if (!in_F(x1, xx1, c2))
        stall("lemma-ge3:3.1", "expected the low-color critical path via x1");
      if (!in_F(x2, xx2, c2)) {
        recolor_edge_or_stall(yy2, c2, "lemma-ge3:3.1:h3-undo");
        recolor_edge_or_stall(xx2, c2, "lemma-ge3:3.1:h4");
        return false;
      }
      Color mu_k = 0;
      for (Color col : S)
        if (!in_F(x2, xx2, col)) {
          mu_k = col;
          break;
        }
      if (mu_k != 0) {
        recolor_edge_or_stall(yy2, c2, "lemma-ge3:3.1:h3-undo");
        recolor_edge_or_stall(xx2, mu_k, "lemma-ge3:3.1:h5");
        finish(c3, "lemma-ge3:3.1:h5");
        return true;
      }
      // The analysis ends here with S inside F_xx2; hand over to the
      // bounded search.
      stall("lemma-ge3:3.1.2",
            "every candidate lies in F_xx2; no recoloring is specified");
    }

    // ---- subcase 3.2 (c2 not in F_yy1) --------------------------------
    Color mu_6 = 0;
    for (Color col : S)
      if (!in_F(y2, yy2, col)) {
        mu_6 = col;
        break;
      }
    if (mu_6 != 0) {
      recolor_edge_or_stall(yy2, mu_6, "lemma-ge3:3.2:h6");
      finish(c2, "lemma-ge3:3.2:h6");
      return true;
    }
    if (!in_F(y2, yy2, alpha)) {
      recolor_set_or_stall({{yy1, c2}, {yy2, alpha}}, TraceAction::Exchange,
                           "lemma-ge3:3.2:h7");
      finish_first_valid(S, "lemma-ge3:3.2:h7");
      return true;
    }
    if (try_recolor_edge(yy2, c3, "lemma-ge3:3.2:h8")) return false;

    Color mu_9 = 0;
    for (Color col : S)
      if (!in_F(x2, xx2, col)) {
        mu_9 = col;
        break;
      }
    if (mu_9 != 0) {
      recolor_edge_or_stall(xx2, mu_9, "lemma-ge3:3.2:h9");
      finish(c3, "lemma-ge3:3.2:h9");
      return true;
    }

    if (!in_F(x2, xx2, c2)) {
      if (try_recolor_edge(xx2, c2, "lemma-ge3:3.2:h10")) return false;
      if (!in_F(x1, xx1, c2) || !in_F(x2, xx2, alpha))
        stall("lemma-ge3:3.2", "h10 failed without the forced F-set shape");
      recolor_set_or_stall({{yy1, c2}, {yy2, c3}}, TraceAction::Recolor,
                           "lemma-ge3:3.2:h11");
      if (try_all_candidates("lemma-ge3:3.2:h11")) return true;
      recolor_set_or_stall({{yy1, alpha}, {yy2, c2}}, TraceAction::Recolor,
                           "lemma-ge3:3.2:h11-undo");
      recolor_set_or_stall({{xx1, c3}, {xx2, c2}}, TraceAction::Recolor,
                           "lemma-ge3:3.2:h12");
      if (try_all_candidates("lemma-ge3:3.2:h12")) return true;

      // Every S-colored neighbor of x2 must see exactly {c2, c3}.
      std::vector<Color> expect{std::min(c2, c3), std::max(c2, c3)};
      for (const auto& inc : colored_neighbors(x2)) {
        if (inc.neighbor == x_) continue;
        if (!contains(S, c_.color(inc.edge))) continue;
        if (F_excl(inc.neighbor, inc.edge) != expect)
          stall("lemma-ge3:3.2",
                "neighbor color claim failed at vertex " +
                    std::to_string(inc.neighbor));
      }
      if (S.size() < 2)
        stall("lemma-ge3:3.2:h13",
              "needs two candidates; maximum degree below 4");
      EdgeId wi = c_.edge_with_color(x2, S[0]);
      EdgeId wj = c_.edge_with_color(x2, S[1]);
      if (wi == -1 || wj == -1)
        stall("lemma-ge3:3.2:h13", "candidate edges at x2 missing");
      recolor_set_or_stall({{wi, S[1]}, {wj, S[0]}}, TraceAction::Exchange,
                           "lemma-ge3:3.2:h13");
      finish_first_valid({S[0], S[1]}, "lemma-ge3:3.2:h13");
      return true;
    }

    // c2 in F_xx2, so alpha is not.
    if (in_F(x1, xx1, c2)) {
      recolor_set_or_stall({{xx1, c3}, {xx2, alpha}}, TraceAction::Recolor,
                           "lemma-ge3:3.2:h14");
      finish_first_valid(S, "lemma-ge3:3.2:h14");
      return true;
    }
    recolor_set_or_stall({{xx1, c2}, {xx2, alpha}}, TraceAction::Recolor,
                         "lemma-ge3:3.2:h15");
    return false;
  }

  // ---- main case b: one shared color, d(y) >= 4 ------------------------

  void case_b(Color alpha) {
    EdgeId yy1 = c_.edge_with_color(y_, alpha);
    VertexId y1 = g_.other_endpoint(yy1, y_);
    auto S = candidate_colors(c_, xy_);
    if (S.size() != 2)
      stall("b", "candidate set has size " + std::to_string(S.size()) +
                     ", expected exactly 2 when every candidate is blocked");
    Color mu = S[0], nu = S[1];
    if (!in_F(y1, yy1, mu) || !in_F(y1, yy1, nu))
      stall("b", "blocked candidates must both appear at y1");

    // Classify the other neighbors of y by how many of {mu, nu} they see.
    EdgeId pick_both = -1, pick_one = -1;
    for (const auto& inc : colored_neighbors(y_)) {
      if (inc.edge == yy1) continue;
      int hits = (in_F(inc.neighbor, inc.edge, mu) ? 1 : 0) +
                 (in_F(inc.neighbor, inc.edge, nu) ? 1 : 0);
      if (hits == 2 && pick_both == -1) pick_both = inc.edge;
      if (hits == 1 && pick_one == -1) pick_one = inc.edge;
    }

    if (pick_both != -1) {
      Color gamma = c_.color(pick_both);
      recolor_set_or_stall({{yy1, gamma}, {pick_both, alpha}},
                           TraceAction::Exchange, "b.1:exchange");
      finish_first_valid({mu, nu}, "b.1");
      return;
    }
    if (pick_one != -1) {
      case_b2(alpha, yy1, mu, nu, pick_one);
      return;
    }
    // b.3: no neighbor of y besides y1 sees mu or nu.
    EdgeId yyp = -1;
    for (const auto& inc : colored_neighbors(y_)) {
      if (inc.edge != yy1) {
        yyp = inc.edge;
        break;
      }
    }
    if (yyp == -1) stall("b.3", "y has no neighbor besides y1");
    Color gamma = c_.color(yyp);
    recolor_set_or_stall({{yy1, gamma}, {yyp, mu}}, TraceAction::Recolor,
                         "b.3:gprime");
    finish(nu, "b.3:gprime");
  }

  void case_b2(Color alpha, EdgeId yy1, Color mu, Color nu,
               EdgeId yyp) {
    VertexId yp = g_.other_endpoint(yyp, y_);
    if (!in_F(yp, yyp, mu)) std::swap(mu, nu);  // orient: mu is present on y'
    Color gamma = c_.color(yyp);
    // kappa: the color of the third edge at y', absent when d(y') = 2.
    Color kappa = 0;
    for (Color col : F_excl(yp, yyp))
      if (col != mu) kappa = col;

    if (kappa == alpha) {
      recolor_edge_or_stall(yyp, nu, "b.2:g0");
      finish(gamma, "b.2:g0");
      return;
    }
    if (try_recolor_set({{yy1, gamma}, {yyp, alpha}}, TraceAction::Exchange,
                        "b.2:g1")) {
      finish(nu, "b.2:g1");
      return;
    }
    if (try_recolor_set({{yy1, gamma}, {yyp, nu}}, TraceAction::Recolor,
                        "b.2:g2")) {
      finish(mu, "b.2:g2");
      return;
    }
    if (kappa == 0)
      stall("b.2", "both exchanges failed although y' has no third color");
    EdgeId yypp = c_.edge_with_color(y_, kappa);
    if (yypp == -1)
      stall("b.2", "kappa-colored edge at y expected by the cycle analysis");
    VertexId ypp = g_.other_endpoint(yypp, y_);
    if (!in_F(ypp, yypp, alpha) || !in_F(ypp, yypp, nu))
      stall("b.2", "y'' does not carry alpha and nu");
    recolor_set_or_stall({{yy1, kappa}, {yyp, alpha}, {yypp, gamma}},
                         TraceAction::Recolor, "b.2:g3");
    finish(nu, "b.2:g3");
  }

  // ---- main case c: two shared colors, d(y) >= 4 -----------------------

  void case_c() {
    auto sh = shared_colors();
    SharedPair p = locate_pair(sh[0], sh[1]);
    auto S = candidate_colors(c_, xy_);
    if (S.size() < 3)
      stall("c", "candidate set smaller than 3 in the two-shared case");
    if (cur_degree(p.y1) > 3 || cur_degree(p.y2) > 3)
      stall("c", "a shared-color neighbor of y has degree above 3");

    auto s_colors_at = [&](VertexId v, EdgeId via) {
      std::vector<Color> out;
      for (Color col : F_excl(v, via))
        if (contains(S, col)) out.push_back(col);
      return out;
    };
    auto at_y1 = s_colors_at(p.y1, p.yy1);
    auto at_y2 = s_colors_at(p.y2, p.yy2);
    if (at_y1.size() < 2) {
      if (at_y2.size() < 2)
        stall("c", "no shared-color neighbor carries two candidate colors");
      std::swap(p.c1, p.c2);
      std::swap(p.xx1, p.xx2);
      std::swap(p.yy1, p.yy2);
      std::swap(p.x1, p.x2);
      std::swap(p.y1, p.y2);
      std::swap(at_y1, at_y2);
    }
    Color gamma = at_y1[0], eta = at_y1[1];
    Color mu = 0;
    for (Color col : at_y2)
      if (col != gamma && col != eta) {
        mu = col;
        break;
      }
    if (mu == 0)
      stall("c", "remaining candidate colors missing from the second side");
    for (Color col : S)
      if (col != gamma && col != eta && !contains(at_y2, col))
        stall("c", "candidate " + std::to_string(col) +
                       " appears on no edge around y1 or y2");

    recolor_edge_or_stall(p.yy1, mu, "c:recolor");
    finish_first_valid({gamma, eta}, "c");
  }
};

}  // namespace

ExtensionContext make_extension_context(const PartialColoring& c, EdgeId xy) {
  ExtensionContext ctx;
  ctx.xy = xy;
  auto [u, v] = c.graph().endpoints(xy);
  auto cur_degree = [&](VertexId w) {
    int d = 0;
    for (const auto& inc : c.graph().incident(w))
      if (inc.edge == xy || c.is_colored(inc.edge)) ++d;
    return d;
  };
  if (std::pair(cur_degree(u), u) <= std::pair(cur_degree(v), v)) {
    ctx.x = u;
    ctx.y = v;
  } else {
    ctx.x = v;
    ctx.y = u;
  }
  ctx.t = c.palette().size - 1;
  ctx.shared = intersect(c.colors_at(ctx.x), c.colors_at(ctx.y));
  ctx.candidates = candidate_colors(c, xy);
  return ctx;
}

ExtensionTrace extend(PartialColoring& c, EdgeId xy, const ExtendOptions& opts) {
  Extender ext(c, xy, opts);
  return ext.run();
}

std::optional<ExtensionTrace> fallback_bounded_search(PartialColoring& c,
                                                      EdgeId xy, int radius,
                                                      long node_budget) {
  const Graph& g = c.graph();
  auto [x, y] = g.endpoints(xy);

  // BFS over the current graph (colored edges plus xy) from {x, y}.
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<VertexId> q;
  dist[x] = 0;
  dist[y] = 0;
  q.push(x);
  q.push(y);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v)) {
      if (inc.edge != xy && !c.is_colored(inc.edge)) continue;
      if (dist[inc.neighbor] == -1) {
        dist[inc.neighbor] = dist[v] + 1;
        q.push(inc.neighbor);
      }
    }
  }

  std::vector<EdgeId> ball;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == xy || !c.is_colored(e)) continue;
    auto [u, v] = g.endpoints(e);
    int d = std::min(dist[u] == -1 ? INT_MAX : dist[u],
                     dist[v] == -1 ? INT_MAX : dist[v]);
    if (d < radius) ball.push_back(e);
  }
  ball.push_back(xy);

  std::vector<Color> original;
  original.reserve(ball.size());
  for (EdgeId e : ball) original.push_back(c.color(e));
  for (EdgeId e : ball)
    if (c.is_colored(e)) c.unassign(e);

  long budget = node_budget;
  const int k = c.palette().size;

  // Depth-first search over the ball, smallest color first. Each partial
  // state stays acyclic, so candidate validity is the exact pruning rule.
  auto dfs = [&](auto&& self, size_t idx) -> bool {
    if (idx == ball.size()) return true;
    EdgeId e = ball[idx];
    auto [u, v] = g.endpoints(e);
    for (Color col = 1; col <= k; ++col) {
      if (--budget < 0) return false;
      if (c.has_color_at(u, col) || c.has_color_at(v, col)) continue;
      if (!is_valid_color(c, e, col)) continue;
      c.assign(e, col);
      if (self(self, idx + 1)) return true;
      c.unassign(e);
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    ExtensionTrace trace;
    trace.edge = xy;
    TraceEvent recolored;
    recolored.label = "fallback";
    recolored.action = TraceAction::Recolor;
    for (size_t i = 0; i + 1 < ball.size(); ++i)
      if (c.color(ball[i]) != original[i])
        recolored.changes.emplace_back(ball[i], c.color(ball[i]));
    if (!recolored.changes.empty()) trace.events.push_back(recolored);
    TraceEvent assign;
    assign.label = "fallback";
    assign.action = TraceAction::Assign;
    assign.changes.emplace_back(xy, c.color(xy));
    trace.events.push_back(assign);
    trace.final_label = "fallback";
    return trace;
  }

  // Restore the input coloring.
  for (size_t i = 0; i < ball.size(); ++i) {
    if (c.is_colored(ball[i])) c.unassign(ball[i]);
  }
  for (size_t i = 0; i < ball.size(); ++i)
    if (original[i] != 0) c.assign(ball[i], original[i]);
  return std::nullopt;
}

}  // namespace aec
