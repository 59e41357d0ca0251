#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aec/errors.hpp"

namespace aec {

using VertexId = int;
using EdgeId = int;

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Simple undirected graph. Vertices are 0..n-1, edge ids are assigned in
/// input order and stay stable for the lifetime of the graph. Immutable
/// after construction.
class Graph {
 public:
  Graph() = default;

  /// Rejects self-loops, duplicate edges and out-of-range endpoints.
  static Graph build(int vertex_count,
                     std::span<const std::pair<int, int>> edge_list);
  static Graph build(int vertex_count,
                     std::initializer_list<std::pair<int, int>> edge_list);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId other_endpoint(EdgeId e, VertexId v) const;
  bool is_endpoint(EdgeId e, VertexId v) const;

  const std::vector<Incidence>& incident(VertexId v) const;
  int degree(VertexId v) const;
  int max_degree() const;

  /// -1 when u and v are not adjacent.
  EdgeId edge_between(VertexId u, VertexId v) const;

  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Number of edges adjacent to e = uv: degree(u) + degree(v) - 2.
int edge_degree(const Graph& g, EdgeId e);

/// True iff every edge has an endpoint of degree <= 3.
bool is_three_sparse(const Graph& g);

/// Smallest-id edge with both endpoints of degree > 3, if any.
std::optional<EdgeId> find_three_sparse_violation(const Graph& g);

/// Smallest-id edge xy with degree(x) + degree(y) < max_degree + 3,
/// i.e. edge degree <= max_degree. Absent for K4, K_{3,3} and the
/// (3,Delta)-biregular bipartite family.
std::optional<EdgeId> find_qualifying_edge(const Graph& g);

struct Component {
  Graph graph;
  std::vector<VertexId> vertex_to_parent;  // local vertex -> parent vertex
  std::vector<EdgeId> edge_to_parent;      // local edge -> parent edge
};

/// Maximal connected subgraphs; isolated vertices yield trivial components.
/// Components are ordered by their smallest parent vertex.
std::vector<Component> connected_components(const Graph& g);

}  // namespace aec
