#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0-indexed endpoints. Lines starting with '#' are comments. Parse errors
/// carry the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Coloring text format: one line "u v c" per colored edge, c >= 1.
/// '#' comments are permitted and ignored.
struct ColoringFile {
  std::vector<std::tuple<int, int, Color>> entries;
};
ColoringFile read_coloring(std::istream& in);
ColoringFile read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const PartialColoring& c);

/// Binds a coloring file to g. Palette defaults to the maximum color seen.
/// Unknown edges and out-of-range endpoints are rejected.
PartialColoring apply_coloring(const Graph& g, const ColoringFile& file,
                               int palette_size = 0);

}  // namespace aec
