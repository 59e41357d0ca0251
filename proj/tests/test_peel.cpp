#include "aec/peel.hpp"

#include "aec/generate.hpp"
#include "doctest.h"

using namespace aec;

namespace {

// Recompute the residual edge degree of each peeled edge independently.
void check_recorded_degrees(const Graph& g, const PeelOrder& order, int k) {
  std::vector<int> degree(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
  for (size_t i = 0; i < order.sequence.size(); ++i) {
    auto [u, v] = g.endpoints(order.sequence[i]);
    int ed = degree[u] + degree[v] - 2;
    CHECK(ed == order.residual_edge_degrees[i]);
    CHECK(ed <= k);
    --degree[u];
    --degree[v];
  }
}

}  // namespace

TEST_CASE("C4 peels completely at k = 2") {
  Graph g = make_cycle(4);
  PeelResult r = peel_order(g, 2);
  REQUIRE(r.complete());
  CHECK(r.order.sequence.size() == 4);
  for (int d : r.order.residual_edge_degrees) CHECK(d <= 2);
  check_recorded_degrees(g, r.order, 2);
}

TEST_CASE("K4 stalls immediately at k = 3") {
  Graph g = make_k4();
  PeelResult r = peel_order(g, 3);
  CHECK_FALSE(r.complete());
  CHECK(r.order.sequence.empty());
  CHECK(r.residual.size() == 6);
}

TEST_CASE("K_{3,4} minus one edge peels fully at k = 4") {
  Graph full = make_complete_bipartite(3, 4);
  std::vector<std::pair<int, int>> edges(full.edges().begin() + 1,
                                         full.edges().end());
  Graph g = Graph::build(full.vertex_count(), edges);
  REQUIRE(find_qualifying_edge(g).has_value());
  PeelResult r = peel_order(g, 4);
  REQUIRE(r.complete());
  CHECK(r.order.sequence.size() == 11);
  check_recorded_degrees(g, r.order, 4);
}

TEST_CASE("ties break towards the smallest edge id") {
  Graph g = make_cycle(4);
  PeelResult r = peel_order(g, 2);
  CHECK(r.order.sequence[0] == 0);
}

TEST_CASE("peel property on random qualifying instances") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Random3SparseParams params{18 + static_cast<int>(seed % 7), 6,
                               22 + static_cast<int>(seed % 5), seed, true};
    Graph g = make_random_3sparse(params);
    for (const auto& comp : connected_components(g)) {
      if (comp.graph.edge_count() == 0) continue;
      if (!find_qualifying_edge(comp.graph).has_value()) continue;
      int delta = comp.graph.max_degree();
      PeelResult r = peel_order(comp.graph, delta);
      CHECK(r.complete());
      check_recorded_degrees(comp.graph, r.order, delta);
    }
  }
}
