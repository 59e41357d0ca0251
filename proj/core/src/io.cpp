#include "aec/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace aec {

namespace {

// Strips comments and whitespace-only lines, tracking line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing header");
  std::istringstream header(line);
  long n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw ParseError(reader.line(), "expected header 'n m'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    if (!reader.next(line))
      throw ParseError(reader.line(), "expected " + std::to_string(m) +
                                          " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw ParseError(reader.line(), "expected 'u v'");
    edges.emplace_back(u, v);
  }
  try {
    return Graph::build(static_cast<int>(n), edges);
  } catch (const GraphError& err) {
    throw ParseError(reader.line(), err.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

ColoringFile read_coloring(std::istream& in) {
  LineReader reader(in);
  ColoringFile file;
  std::string line;
  while (reader.next(line)) {
    std::istringstream row(line);
    int u = 0, v = 0, c = 0;
    if (!(row >> u >> v >> c) || c < 1)
      throw ParseError(reader.line(), "expected 'u v c' with c >= 1");
    file.entries.emplace_back(u, v, c);
  }
  return file;
}

ColoringFile read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const PartialColoring& c) {
  out << "# palette " << c.palette().size << '\n';
  const Graph& g = c.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!c.is_colored(e)) continue;
    auto [u, v] = g.endpoints(e);
    out << u << ' ' << v << ' ' << c.color(e) << '\n';
  }
}

PartialColoring apply_coloring(const Graph& g, const ColoringFile& file,
                               int palette_size) {
  int max_color = palette_size;
  for (const auto& [u, v, c] : file.entries) max_color = std::max(max_color, c);
  PartialColoring coloring(g, Palette{std::max(1, max_color)});
  for (const auto& [u, v, c] : file.entries) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
      throw ColoringError("coloring references vertex outside the graph");
    EdgeId e = g.edge_between(u, v);
    if (e == -1)
      throw ColoringError("coloring references missing edge (" +
                          std::to_string(u) + "," + std::to_string(v) + ")");
    coloring.assign(e, c);
  }
  return coloring;
}

}  // namespace aec
