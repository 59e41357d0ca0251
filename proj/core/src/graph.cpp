#include "aec/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace aec {

Graph Graph::build(int vertex_count,
                   std::span<const std::pair<int, int>> edge_list) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  Graph g;
  g.adjacency_.resize(vertex_count);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
      throw GraphError("endpoint out of range in edge (" + std::to_string(a) +
                       "," + std::to_string(b) + ")");
    if (a == b)
      throw GraphError("self-loop at vertex " + std::to_string(a));
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw GraphError("duplicate edge (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.emplace_back(a, b);
    g.adjacency_[a].push_back({b, id});
    g.adjacency_[b].push_back({a, id});
  }
  return g;
}

Graph Graph::build(int vertex_count,
                   std::initializer_list<std::pair<int, int>> edge_list) {
  return build(vertex_count,
               std::span<const std::pair<int, int>>(edge_list.begin(),
                                                    edge_list.size()));
}

std::pair<VertexId, VertexId> Graph::endpoints(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw GraphError("unknown edge id " + std::to_string(e));
  return edges_[e];
}

VertexId Graph::other_endpoint(EdgeId e, VertexId v) const {
  auto [a, b] = endpoints(e);
  if (v == a) return b;
  if (v == b) return a;
  throw GraphError("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                   std::to_string(e));
}

bool Graph::is_endpoint(EdgeId e, VertexId v) const {
  auto [a, b] = endpoints(e);
  return v == a || v == b;
}

const std::vector<Incidence>& Graph::incident(VertexId v) const {
  return adjacency_.at(v);
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(adjacency_.at(v).size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, static_cast<int>(adj.size()));
  return d;
}

EdgeId Graph::edge_between(VertexId u, VertexId v) const {
  for (const auto& inc : adjacency_.at(u))
    if (inc.neighbor == v) return inc.edge;
  return -1;
}

int edge_degree(const Graph& g, EdgeId e) {
  auto [u, v] = g.endpoints(e);
  return g.degree(u) + g.degree(v) - 2;
}

bool is_three_sparse(const Graph& g) {
  return !find_three_sparse_violation(g).has_value();
}

std::optional<EdgeId> find_three_sparse_violation(const Graph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (g.degree(u) > 3 && g.degree(v) > 3) return e;
  }
  return std::nullopt;
}

std::optional<EdgeId> find_qualifying_edge(const Graph& g) {
  const int delta = g.max_degree();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (g.degree(u) + g.degree(v) < delta + 3) return e;
  }
  return std::nullopt;
}

std::vector<Component> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int count = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (label[inc.neighbor] == -1) {
          label[inc.neighbor] = count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }

  std::vector<Component> out(count);
  std::vector<std::vector<VertexId>> members(count);
  std::vector<int> local_id(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    local_id[v] = static_cast<int>(members[label[v]].size());
    members[label[v]].push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> local_edges(count);
  for (int c = 0; c < count; ++c) out[c].vertex_to_parent = members[c];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    int c = label[u];
    local_edges[c].emplace_back(local_id[u], local_id[v]);
    out[c].edge_to_parent.push_back(e);
  }
  for (int c = 0; c < count; ++c) {
    out[c].graph = Graph::build(static_cast<int>(members[c].size()),
                                std::span<const std::pair<int, int>>(
                                    local_edges[c].data(), local_edges[c].size()));
  }
  return out;
}

}  // namespace aec
