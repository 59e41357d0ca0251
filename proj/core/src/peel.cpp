#include "aec/peel.hpp"

namespace aec {

PeelResult peel_order(const Graph& g, int k) {
  const int m = g.edge_count();
  std::vector<int> degree(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(m, false);

  PeelResult result;
  result.order.sequence.reserve(m);
  for (int step = 0; step < m; ++step) {
    EdgeId best = -1;
    int best_degree = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (removed[e]) continue;
      auto [u, v] = g.endpoints(e);
      int ed = degree[u] + degree[v] - 2;
      if (best == -1 || ed < best_degree) {
        best = e;
        best_degree = ed;
      }
    }
    if (best == -1 || best_degree > k) break;
    removed[best] = true;
    auto [u, v] = g.endpoints(best);
    --degree[u];
    --degree[v];
    result.order.sequence.push_back(best);
    result.order.residual_edge_degrees.push_back(best_degree);
  }
  for (EdgeId e = 0; e < m; ++e)
    if (!removed[e]) result.residual.push_back(e);
  return result;
}

}  // namespace aec
