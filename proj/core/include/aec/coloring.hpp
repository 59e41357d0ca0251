#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

using Color = int;  // colors are 1..palette.size; 0 means uncolored

struct Palette {
  int size = 0;
};

/// Proper partial edge coloring with a per-vertex color -> edge index, so a
/// bichromatic walk advances in O(1) per step. Properness is enforced on
/// every mutation; acyclicity is the caller's obligation (see
/// is_valid_color and verify_acyclic).
///
/// F-set reading: colors_at(v) is F_v, the set of colors on edges incident
/// to v. colors_at_excluding(v, e) is the F_{uv} of the definitions: the
/// colors at v other than the color of e. For an uncolored e the two agree.
class PartialColoring {
 public:
  PartialColoring(const Graph& g, Palette p);
  PartialColoring(Graph&&, Palette) = delete;  // must outlive the coloring

  const Graph& graph() const { return *graph_; }
  Palette palette() const { return palette_; }

  Color color(EdgeId e) const { return colors_.at(e); }
  bool is_colored(EdgeId e) const { return colors_.at(e) != 0; }
  int colored_count() const { return colored_count_; }

  void assign(EdgeId e, Color c);
  void unassign(EdgeId e);
  /// unassign + assign in one step, with the same properness check.
  void recolor(EdgeId e, Color c);
  /// Swap the colors of two edges sharing vertex w. Involution; rejects
  /// improper results naming the clashing endpoint.
  void exchange(VertexId w, EdgeId e1, EdgeId e2);

  /// -1 when no edge of color c is incident to v.
  EdgeId edge_with_color(VertexId v, Color c) const;

  std::vector<Color> colors_at(VertexId v) const;
  std::vector<Color> colors_at_excluding(VertexId v, EdgeId e) const;
  bool has_color_at(VertexId v, Color c) const {
    return edge_with_color(v, c) != -1;
  }

  bool operator==(const PartialColoring& other) const {
    return colors_ == other.colors_;
  }

 private:
  const Graph* graph_;
  Palette palette_;
  std::vector<Color> colors_;              // per edge, 0 = uncolored
  std::vector<std::vector<EdgeId>> index_; // [vertex][color] -> edge or -1
  int colored_count_ = 0;
};

/// Palette colors absent from both endpoints of e (the candidate set S).
std::vector<Color> candidate_colors(const PartialColoring& c, EdgeId e);

struct BichromaticPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::pair<Color, Color> colors;
};

/// A closed bichromatic walk, canonicalized with the minimum vertex first
/// and its smaller cycle-neighbor second.
struct BichromaticCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1 mod k]
  std::pair<Color, Color> colors;
};

using WalkResult = std::variant<BichromaticPath, BichromaticCycle>;

/// The maximal bichromatic path through `start`: walk the first_color edge
/// if present and alternate, extending backward from `start` with
/// second_color. Deterministic under properness. A walk that returns to
/// `start` is reported as a cycle, never a path. The returned path runs
/// from the backward endpoint towards the forward endpoint.
WalkResult max_bichromatic_path(const PartialColoring& c, VertexId start,
                                Color first_color, Color second_color);

/// True iff the maximal (alpha,beta) path starting at x with an alpha edge
/// ends at y with an alpha edge. Symmetric in (x, y).
bool critical_path_exists(const PartialColoring& c, Color alpha, Color beta,
                          VertexId x, VertexId y);

/// Route A (critical-path criterion): a candidate beta is invalid for
/// e = xy iff some alpha in F_xy n F_yx has an (alpha,beta,xy)-critical
/// path. Throws if beta is not a candidate.
bool is_valid_color(const PartialColoring& c, EdgeId e, Color beta);

/// Route B, the simulate-and-detect reference for Route A: assign beta,
/// run whole-graph bichromatic-cycle detection, unassign. Precondition:
/// c is acyclic. Kept as an independent oracle for the Route A criterion.
bool is_valid_color_direct(const PartialColoring& c, EdgeId e, Color beta);

struct ProperViolation {
  VertexId vertex;
  EdgeId first;
  EdgeId second;
  Color color;
};

/// nullopt when no vertex sees a repeated color; otherwise the first
/// violation in (vertex, color) order.
std::optional<ProperViolation> verify_proper(const PartialColoring& c);

/// nullopt when no cycle uses exactly two colors. Scans color pairs and
/// walks the degree-<=2 subgraph of each pair. Requires a proper coloring.
std::optional<BichromaticCycle> verify_acyclic(const PartialColoring& c);

}  // namespace aec
