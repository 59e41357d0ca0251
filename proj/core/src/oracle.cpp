#include "aec/oracle.hpp"

#include <algorithm>

#include "aec/peel.hpp"
#include "aec/solver.hpp"

namespace aec {

namespace {

// Would coloring the (currently uncolored) edge e = uv with `col` close a
// bichromatic cycle? For every color c2 present at both endpoints, follow
// the alternating (c2, col) walk leaving u on its c2 edge; a cycle appears
// exactly when that walk arrives at v on a c2 edge.
bool closes_cycle(const PartialColoring& c, EdgeId e, Color col) {
  const Graph& g = c.graph();
  auto [u, v] = g.endpoints(e);
  for (Color c2 = 1; c2 <= c.palette().size; ++c2) {
    if (c2 == col) continue;
    if (c.edge_with_color(u, c2) == -1 || c.edge_with_color(v, c2) == -1)
      continue;
    VertexId cur = u;
    Color last = col;  // pretend we just crossed e
    while (true) {
      Color want = (last == col) ? c2 : col;
      EdgeId step = c.edge_with_color(cur, want);
      if (step == -1) break;
      cur = g.other_endpoint(step, cur);
      last = want;
      if (cur == v) break;
    }
    if (cur == v && last == c2) return true;
  }
  return false;
}

struct Search {
  PartialColoring coloring;
  const std::vector<EdgeId>& order;
  long budget;
  long nodes = 0;
  bool exhausted_budget = false;

  bool run(size_t pos, Color max_used, int k) {
    if (pos == order.size()) return true;
    EdgeId e = order[pos];
    auto [u, v] = coloring.graph().endpoints(e);
    Color limit = std::min(k, max_used + 1);
    for (Color col = 1; col <= limit; ++col) {
      if (--budget < 0) {
        exhausted_budget = true;
        return false;
      }
      ++nodes;
      if (coloring.has_color_at(u, col) || coloring.has_color_at(v, col))
        continue;
      if (closes_cycle(coloring, e, col)) continue;
      coloring.assign(e, col);
      if (run(pos + 1, std::max(max_used, col), k)) return true;
      coloring.unassign(e);
      if (exhausted_budget) return false;
    }
    return false;
  }
};

}  // namespace

std::variant<OracleResult, OracleBounds> exact_aci(const Graph& g, int k_max,
                                                   const OracleLimits& limits) {
  if (g.edge_count() > limits.max_edges_guard && !limits.override_guard)
    throw Error("oracle guard: " + std::to_string(g.edge_count()) +
                " edges exceeds the default limit of " +
                std::to_string(limits.max_edges_guard));
  if (g.edge_count() == 0)
    return OracleResult{0, PartialColoring(g, Palette{1}), 0};

  const int delta = g.max_degree();
  PeelResult peel = peel_order(g, delta);
  std::vector<EdgeId> order;
  if (peel.complete()) {
    order.assign(peel.order.sequence.rbegin(), peel.order.sequence.rend());
  } else {
    order.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
  }

  long nodes_total = 0;
  long budget = limits.node_budget;
  // Best known upper bound when the search cannot finish: the constructive
  // solver's color count for 3-sparse inputs, unknown otherwise.
  auto upper_bound = [&]() -> int {
    if (!is_three_sparse(g)) return 0;
    try {
      return acyclic_color(g).stats.colors_used;
    } catch (const Error&) {
      return delta + 2;
    }
  };
  for (int k = std::max(delta, 1); k <= k_max; ++k) {
    Search search{PartialColoring(g, Palette{k}), order, budget};
    bool found = search.run(0, 0, k);
    nodes_total += search.nodes;
    budget -= search.nodes;
    if (found) {
      if (verify_proper(search.coloring).has_value() ||
          verify_acyclic(search.coloring).has_value())
        throw Error("oracle witness failed verification");
      return OracleResult{k, std::move(search.coloring), nodes_total};
    }
    if (search.exhausted_budget)
      return OracleBounds{k, upper_bound(), nodes_total};
  }
  return OracleBounds{k_max + 1, upper_bound(), nodes_total};
}

long all_acyclic_colorings(const Graph& g, int k, long cap,
                           const std::function<void(const PartialColoring&)>&
                               emit) {
  if (k < 1) return 0;
  PartialColoring coloring(g, Palette{k});
  long count = 0;
  auto dfs = [&](auto&& self, EdgeId e) -> bool {  // false = cap reached
    if (e == g.edge_count()) {
      ++count;
      if (emit) emit(coloring);
      return count < cap;
    }
    auto [u, v] = g.endpoints(e);
    for (Color col = 1; col <= k; ++col) {
      if (coloring.has_color_at(u, col) || coloring.has_color_at(v, col))
        continue;
      if (closes_cycle(coloring, e, col)) continue;
      coloring.assign(e, col);
      bool keep_going = self(self, e + 1);
      coloring.unassign(e);
      if (!keep_going) return false;
    }
    return true;
  };
  if (g.edge_count() == 0) {
    if (emit) emit(coloring);
    return 1;
  }
  dfs(dfs, 0);
  return count;
}

}  // namespace aec
