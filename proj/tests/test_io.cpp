#include "aec/io.hpp"

#include <sstream>

#include "aec/generate.hpp"
#include "aec/solver.hpp"
#include "doctest.h"

using namespace aec;

TEST_CASE("edge list round trip with comments") {
  std::istringstream in(
      "# a pentagon\n"
      "5 5\n"
      "0 1\n1 2\n# middle comment\n2 3\n3 4\n4 0\n");
  Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);

  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  Graph h = read_edge_list(back);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list parse errors carry line numbers") {
  std::istringstream missing("3\n");
  CHECK_THROWS_AS(read_edge_list(missing), ParseError);

  std::istringstream truncated("3 2\n0 1\n");
  try {
    read_edge_list(truncated);
    FAIL("expected error");
  } catch (const ParseError& err) {
    CHECK(err.line == 2);
  }

  std::istringstream bad_row("2 1\n0 x\n");
  try {
    read_edge_list(bad_row);
    FAIL("expected error");
  } catch (const ParseError& err) {
    CHECK(err.line == 2);
  }

  std::istringstream dup("2 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(dup), ParseError);
}

TEST_CASE("coloring file round trip") {
  Graph g = make_cycle(4);
  PartialColoring c(g, Palette{3});
  c.assign(0, 1);
  c.assign(1, 2);
  c.assign(2, 1);
  c.assign(3, 3);

  std::ostringstream out;
  write_coloring(out, c);
  std::istringstream in(out.str());
  ColoringFile file = read_coloring(in);
  CHECK(file.entries.size() == 4);
  PartialColoring parsed = apply_coloring(g, file);
  CHECK(parsed == c);
}

TEST_CASE("coloring rejections") {
  Graph g = make_cycle(4);
  ColoringFile missing_edge;
  missing_edge.entries = {{0, 2, 1}};
  CHECK_THROWS_AS(apply_coloring(g, missing_edge), ColoringError);

  ColoringFile out_of_range;
  out_of_range.entries = {{0, 9, 1}};
  CHECK_THROWS_AS(apply_coloring(g, out_of_range), ColoringError);

  std::istringstream zero_color("0 1 0\n");
  CHECK_THROWS_AS(read_coloring(zero_color), ParseError);
}

TEST_CASE("solver output written and re-read stays verified") {
  Graph g = make_random_3sparse({18, 5, 24, 9, true});
  SolveResult r = acyclic_color(g);
  std::ostringstream out;
  write_coloring(out, r.coloring);
  std::istringstream in(out.str());
  PartialColoring parsed = apply_coloring(g, read_coloring(in), r.palette_size);
  CHECK(parsed == r.coloring);
  CHECK_FALSE(verify_acyclic(parsed).has_value());
}
