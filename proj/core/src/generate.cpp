#include "aec/generate.hpp"

#include <algorithm>
#include <set>

namespace aec {

Graph make_k4() { return make_complete(4); }

Graph make_k33() { return make_complete_bipartite(3, 3); }

Graph make_path(int vertices) {
  if (vertices < 1) throw GraphError("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(vertices, edges);
}

Graph make_cycle(int vertices) {
  if (vertices < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) edges.emplace_back(i, (i + 1) % vertices);
  return Graph::build(vertices, edges);
}

Graph make_star(int leaves) {
  if (leaves < 0) throw GraphError("negative leaf count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, edges);
}

Graph make_complete(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  return Graph::build(vertices, edges);
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::build(a + b, edges);
}

Graph make_named(const std::string& name, int n) {
  if (name == "k4") return make_k4();
  if (name == "k33") return make_k33();
  if (name == "path") return make_path(n);
  if (name == "cycle") return make_cycle(n);
  if (name == "star") return make_star(n);
  throw GraphError("unknown graph family: " + name);
}

Graph make_biregular_3_delta(int a, int delta) {
  if (delta < 4) throw GraphError("biregular family requires delta >= 4");
  if ((3 * a) % delta != 0)
    throw GraphError("infeasible degree sequence: delta must divide 3a");
  if (a < delta)
    throw GraphError("infeasible degree sequence: right degree exceeds left "
                     "side size");
  const int b = 3 * a / delta;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(3 * a);
  // Left vertex i meets three consecutive right residues; since delta | 3a
  // the right degrees come out exactly delta.
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < 3; ++j) edges.emplace_back(i, a + (3 * i + j) % b);
  return Graph::build(a + b, edges);
}

Graph make_random_3sparse(const Random3SparseParams& params) {
  const int n = params.n;
  if (n < 2) throw GraphError("need at least two vertices");
  const int low_count = std::max(1, (2 * n) / 3);
  if (params.m_target > 3 * low_count)
    throw GraphError("infeasible target: " + std::to_string(params.m_target) +
                     " edges exceed the low-pool capacity of " +
                     std::to_string(3 * low_count));
  if (static_cast<long>(params.m_target) >
      static_cast<long>(n) * (n - 1) / 2)
    throw GraphError("infeasible target: more edges than vertex pairs");

  SplitMix64 rng(params.seed);
  auto capacity = [&](VertexId v) {
    return v < low_count ? 3 : params.delta_cap;
  };

  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::vector<int> degree(n, 0);
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    long tries = 60L * params.m_target + 240;
    while (static_cast<int>(edges.size()) < params.m_target && tries-- > 0) {
      std::vector<VertexId> low_avail;
      for (VertexId v = 0; v < low_count; ++v)
        if (degree[v] < 3) low_avail.push_back(v);
      if (low_avail.empty()) break;
      VertexId u = low_avail[rng.below(low_avail.size())];

      // Lean towards the high pool so maximum-degree vertices get exercised.
      std::vector<VertexId> pool;
      if (rng.below(3) < 2) {
        for (VertexId v = low_count; v < n; ++v)
          if (degree[v] < capacity(v)) pool.push_back(v);
      }
      if (pool.empty()) {
        for (VertexId v = 0; v < n; ++v)
          if (v != u && degree[v] < capacity(v)) pool.push_back(v);
      }
      if (pool.empty()) break;
      VertexId v = pool[rng.below(pool.size())];
      if (v == u) continue;
      auto key = std::minmax(u, v);
      if (used.count(key)) continue;
      used.insert(key);
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
    if (static_cast<int>(edges.size()) != params.m_target) continue;
    Graph g = Graph::build(n, edges);
    if (params.require_qualifying && !find_qualifying_edge(g).has_value())
      continue;
    return g;
  }
  throw GraphError("retry exhaustion while generating a random 3-sparse graph");
}

}  // namespace aec
