#pragma once

#include <tuple>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec::testing {

// A partially colored graph with one distinguished uncolored edge, used to
// drive a specific branch of the extension analysis. Edge 0 is always the
// edge to extend.
struct ExtensionFixture {
  int n = 0;
  int palette = 0;
  // (u, v, color); color 0 marks the edge to extend.
  std::vector<std::tuple<int, int, Color>> edges;

  Graph graph() const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [u, v, c] : edges) pairs.emplace_back(u, v);
    return Graph::build(n, pairs);
  }

  PartialColoring coloring(const Graph& g) const {
    PartialColoring c(g, Palette{palette});
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      Color col = std::get<2>(edges[e]);
      if (col != 0) c.assign(e, col);
    }
    return c;
  }
};

// Both endpoints degree 3, two shared colors, subcase with both low colors
// crossing sides. Expected route: recolor yy1 then assign directly.
inline ExtensionFixture witness_2_1() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 A=6 B=7 C=8 U=9 T=10 W=11 Z4=12 Z5=13
  return {14, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2},
    {2, 6, 4}, {2, 7, 5}, {6, 12, 1}, {7, 13, 1},
    {12, 4, 4}, {13, 4, 5}, {4, 10, 2},
    {3, 8, 3}, {8, 9, 2}, {9, 5, 3}, {5, 11, 1},
  }};
}

// Two shared colors, exactly one crossing; the first recoloring frees a
// candidate immediately.
inline ExtensionFixture witness_2_2_f0() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 A=6 Z=7 C=8 U=9 D=10 V=11 W=12
  return {13, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2},
    {2, 6, 3}, {6, 7, 1}, {7, 4, 3},
    {3, 8, 4}, {8, 9, 2}, {9, 5, 4},
    {3, 10, 5}, {10, 11, 2}, {11, 5, 5},
    {5, 12, 1},
  }};
}

// Like the f0 witness but every candidate stays blocked after the first
// recoloring and the low endpoint's second edge is bare, forcing the
// exchange at x.
inline ExtensionFixture witness_2_2_f1() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 W=6 A3=7 Z3=8 A4=9 Z4=10 A5=11 Z5=12
  return {13, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2},
    {5, 6, 1},
    {2, 7, 3}, {7, 8, 1}, {8, 4, 3},
    {2, 9, 4}, {9, 10, 1}, {10, 4, 4},
    {2, 11, 5}, {11, 12, 1}, {12, 4, 5},
  }};
}

// The f1 witness plus a low-color edge at x2, taking the two-recolor route.
inline ExtensionFixture witness_2_2_f2() {
  ExtensionFixture f = witness_2_2_f1();
  f.n = 14;
  f.edges.push_back({3, 13, 1});  // x2-E
  return f;
}

// Mirror image of the f0 witness: the shared colors change roles, driving
// the orientation swap inside the two-shared dispatch.
inline ExtensionFixture witness_2_2_mirror() {
  ExtensionFixture f = witness_2_2_f0();
  for (auto& [u, v, c] : f.edges) {
    if (c == 1)
      c = 2;
    else if (c == 2)
      c = 1;
  }
  return f;
}

// Neither low color crosses sides; the yy-exchange frees a candidate.
inline ExtensionFixture witness_2_3_f0() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 A3=6 Z3=7 A4=8 Z4=9 C5=10 U5=11
  return {12, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2},
    {2, 6, 3}, {6, 7, 1}, {7, 4, 3},
    {2, 8, 4}, {8, 9, 1}, {9, 4, 4},
    {3, 10, 5}, {10, 11, 2}, {11, 5, 5},
  }};
}

// Fully saturated configuration where all four exchange attempts fail and
// the double exchange at y1/y2 is the only way out. Per candidate color mu
// four alternating detours block the four attempts without ever closing a
// two-colored cycle among themselves:
//   x1 -mu- a -1- b -mu- y1            (blocks the plain attempt)
//   x2 -mu- c -2- d -mu- e -2- b       (blocks the yy-exchange)
//   a -2- f -mu- g -2- u -mu- y2       (blocks the xx-exchange)
//   c -1- h -mu- i -1- u               (blocks the double swap)
inline ExtensionFixture witness_2_3_f3() {
  ExtensionFixture f;
  f.n = 36;
  f.palette = 5;
  f.edges = {
      {0, 1, 0},
      {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2},
  };
  for (int k = 0; k < 3; ++k) {
    Color mu = 3 + k;
    int a = 6 + 10 * k, b = a + 1, c = a + 2, d = a + 3, e = a + 4, ff = a + 5,
        gg = a + 6, h = a + 7, i = a + 8, u = a + 9;
    f.edges.push_back({2, a, mu});
    f.edges.push_back({a, b, 1});
    f.edges.push_back({b, 4, mu});
    f.edges.push_back({3, c, mu});
    f.edges.push_back({c, d, 2});
    f.edges.push_back({d, e, mu});
    f.edges.push_back({e, b, 2});
    f.edges.push_back({a, ff, 2});
    f.edges.push_back({ff, gg, mu});
    f.edges.push_back({gg, u, 2});
    f.edges.push_back({c, h, 1});
    f.edges.push_back({h, i, mu});
    f.edges.push_back({i, u, 1});
    f.edges.push_back({u, 5, mu});
  }
  return f;
}

// One shared color, degrees (2,3); a candidate misses the second y-edge.
inline ExtensionFixture witness_3_c() {
  // x=0 y=1 x1=2 y1=3 y2=4 A3=5 Z3=6 A4=7 Z4=8 A5=9 Z5=10 W=11
  return {12, 5, {
    {0, 1, 0},
    {0, 2, 1}, {1, 3, 1}, {1, 4, 2},
    {2, 5, 3}, {5, 6, 1}, {6, 3, 3},
    {2, 7, 4}, {7, 8, 1}, {8, 3, 4},
    {2, 9, 5}, {9, 10, 1}, {10, 3, 5},
    {4, 11, 1},
  }};
}

// One shared color, degrees (2,3); every candidate sits on the second
// y-edge, so the two y-edges are exchanged.
inline ExtensionFixture witness_3_cprime() {
  // x=0 y=1 x1=2 y1=3 y2=4 A3=5 Z3=6 A4=7 Z4=8 A5=9 Z5=10 U3=11 U4=12 U5=13
  return {14, 5, {
    {0, 1, 0},
    {0, 2, 1}, {1, 3, 1}, {1, 4, 2},
    {2, 5, 3}, {5, 6, 1}, {6, 3, 3},
    {2, 7, 4}, {7, 8, 1}, {8, 3, 4},
    {2, 9, 5}, {9, 10, 1}, {10, 3, 5},
    {4, 11, 3}, {4, 12, 4}, {4, 13, 5},
  }};
}

// Degrees (3,3), one shared color, the second y-neighbor low color present
// at y1; its third color is free at y2, reducing to the two-shared case.
inline ExtensionFixture witness_31_h1() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 T=6 W=7 A4=8 Z4=9 A5=10 Z5=11
  return {12, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 3}, {1, 4, 1}, {1, 5, 2},
    {4, 6, 2}, {5, 7, 1},
    {2, 8, 4}, {8, 9, 1}, {9, 4, 4},
    {2, 10, 5}, {10, 11, 1}, {11, 4, 5},
  }};
}

// As h1 but both low colors block the reduction; a candidate recoloring of
// yy2 frees the second low color for the extension edge.
inline ExtensionFixture witness_31_h3() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 T=6 W=7 A4=8 Z4=9 A5=10 Z5=11 V=12
  return {13, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 3}, {1, 4, 1}, {1, 5, 2},
    {4, 6, 2}, {5, 7, 1}, {5, 12, 3},
    {2, 8, 4}, {8, 9, 1}, {9, 4, 4},
    {2, 10, 5}, {10, 11, 1}, {11, 4, 5},
  }};
}

// The saturated end of the one-shared-color analysis: every candidate sits
// in F_xx2 as well, which the case analysis leaves unresolved. The
// extension must stall and the bounded search must take over.
inline ExtensionFixture witness_31_stall() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 G=6 T=7 H=8 C4=9 C5=10 W=11 V=12
  // A4=13 Z4=14 A5=15 Z5=16
  return {17, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 3}, {1, 4, 1}, {1, 5, 2},
    {2, 6, 2}, {6, 7, 1}, {7, 4, 2},
    {2, 13, 4}, {13, 14, 1}, {14, 4, 4},
    {2, 15, 5}, {15, 16, 1}, {16, 4, 5},
    {3, 8, 2}, {3, 9, 4}, {3, 10, 5},
    {5, 11, 1}, {5, 12, 3},
  }};
}

// As h1 but the reduction route goes through the two-edge recoloring: the
// second candidate color sits at y2 and the shared color does not.
inline ExtensionFixture witness_31_h2() {
  ExtensionFixture f = witness_31_h1();
  for (auto& e : f.edges)
    if (std::get<0>(e) == 5 && std::get<1>(e) == 7) e = {5, 7, 3};
  return f;
}

// The stall witness without the low-color edge at x2: the h4 recoloring
// applies and reduces to the two-shared case.
inline ExtensionFixture witness_31_h4() {
  ExtensionFixture f = witness_31_stall();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    return std::get<0>(e) == 3 && std::get<1>(e) == 8;
  });
  return f;
}

// The stall witness without the candidate edges at x2: a free candidate
// recolors x2's edge and releases the third x-color for the extension.
inline ExtensionFixture witness_31_h5() {
  ExtensionFixture f = witness_31_stall();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    return std::get<0>(e) == 3 &&
           (std::get<1>(e) == 9 || std::get<1>(e) == 10);
  });
  return f;
}

// One shared color, no low-color edge at y1, a candidate missing at y2.
inline ExtensionFixture witness_32_h6() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 W=6 A4=7 Z4=8 A5=9 Z5=10
  return {11, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 3}, {1, 4, 1}, {1, 5, 2},
    {5, 6, 1},
    {2, 7, 4}, {7, 8, 1}, {8, 4, 4},
    {2, 9, 5}, {9, 10, 1}, {10, 4, 5},
  }};
}

// One shared color, all candidates at y2 but the shared color absent there:
// the two y-edges are exchanged.
inline ExtensionFixture witness_32_h7() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 A4=6 Z4=7 A5=8 Z5=9 U4=10 U5=11
  return {12, 5, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 3}, {1, 4, 1}, {1, 5, 2},
    {2, 6, 4}, {6, 7, 1}, {7, 4, 4},
    {2, 8, 5}, {8, 9, 1}, {9, 4, 5},
    {5, 10, 4}, {5, 11, 5},
  }};
}

// The deep end of the one-shared-color analysis: every intermediate
// recoloring is blocked until the exchange at x2's candidate edges. Per
// candidate mu: x1 -mu- A -1- B -mu- y1 and
// x2 -mu- W -3- U -mu- y2 with W -2- V -mu- T -2- U.
inline ExtensionFixture witness_32_h13() {
  ExtensionFixture f;
  f.n = 20;
  f.palette = 5;
  f.edges = {
      {0, 1, 0},
      {0, 2, 1}, {0, 3, 3}, {1, 4, 1}, {1, 5, 2},
      {2, 6, 2}, {6, 3, 1},   // x1-H-x2
      {4, 7, 3}, {7, 5, 1},   // y1-E-y2
  };
  for (int i = 0; i < 2; ++i) {
    Color mu = 4 + i;
    int A = 8 + 6 * i, B = 9 + 6 * i, W = 10 + 6 * i, U = 11 + 6 * i,
        V = 12 + 6 * i, T = 13 + 6 * i;
    f.edges.push_back({2, A, mu});
    f.edges.push_back({A, B, 1});
    f.edges.push_back({B, 4, mu});
    f.edges.push_back({3, W, mu});
    f.edges.push_back({W, U, 3});
    f.edges.push_back({U, 5, mu});
    f.edges.push_back({W, V, 2});
    f.edges.push_back({V, T, mu});
    f.edges.push_back({T, U, 2});
  }
  return f;
}

// Deep-branch variants of the h13 configuration.

// Without the blocking walk from y1 to y2 the third x-color moves onto
// yy2 and the problem reduces to the two-shared case.
inline ExtensionFixture witness_32_h8() {
  ExtensionFixture f = witness_32_h13();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    int u = std::get<0>(e), v = std::get<1>(e);
    return (u == 4 && v == 7) || (u == 7 && v == 5);
  });
  f.edges.push_back({5, 7, 1});  // keep the shared color at y2
  return f;
}

// One candidate missing from x2 frees the third x-color directly.
inline ExtensionFixture witness_32_h9() {
  ExtensionFixture f = witness_32_h13();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    return std::get<0>(e) == 3 && std::get<1>(e) == 16;  // x2-W5
  });
  return f;
}

// Breaking the low-color chain between x1 and x2 lets x2 take the low
// color, reducing to the two-shared case.
inline ExtensionFixture witness_32_h10() {
  ExtensionFixture f = witness_32_h13();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    return std::get<0>(e) == 6 && std::get<1>(e) == 3;  // H-x2
  });
  f.n = 21;
  f.edges.push_back({3, 20, 1});  // shared-color leaf at x2
  return f;
}

// The low color sits at both x-neighbors: recolor both x-edges and assign
// a candidate directly.
inline ExtensionFixture witness_32_h14() {
  ExtensionFixture f = witness_32_h13();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    return std::get<0>(e) == 6 && std::get<1>(e) == 3;  // H-x2
  });
  f.n = 21;
  f.edges.push_back({3, 20, 2});  // low-color leaf at x2
  return f;
}

// The low color sits at x2 but not x1: the two x-edges are recolored and
// the problem reduces to the two-shared case.
inline ExtensionFixture witness_32_h15() {
  ExtensionFixture f = witness_32_h14();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    return std::get<0>(e) == 2 && std::get<1>(e) == 6;  // x1-H
  });
  return f;
}

// High-degree y whose shared-color neighbor carries both candidates.
inline ExtensionFixture witness_b1() {
  // x=0 y=1 x1=2 y1=3 Y2=4 Y3=5 J=6 K=7 yp=8 ypp=9 Q4=10 Q5=11
  return {12, 5, {
    {0, 1, 0},
    {0, 2, 1}, {1, 3, 1}, {1, 4, 2}, {1, 5, 3},
    {3, 8, 4}, {3, 9, 5},
    {2, 6, 4}, {6, 8, 1},
    {2, 7, 5}, {7, 9, 1},
    {4, 10, 4}, {4, 11, 5},
  }};
}

// One candidate on y', whose third color equals the shared color.
inline ExtensionFixture witness_b2_g0() {
  // x=0 y=1 x1=2 y1=3 Y2=4 Y3=5 J=6 K=7 yp=8 ypp=9 Q4=10 QA=11
  return {12, 5, {
    {0, 1, 0},
    {0, 2, 1}, {1, 3, 1}, {1, 4, 2}, {1, 5, 3},
    {3, 8, 4}, {3, 9, 5},
    {2, 6, 4}, {6, 8, 1},
    {2, 7, 5}, {7, 9, 1},
    {4, 10, 4}, {4, 11, 1},
  }};
}

// As g0 but the larger candidate is the one present on y', driving the
// mu/nu orientation swap.
inline ExtensionFixture witness_b2_mirror() {
  ExtensionFixture f = witness_b2_g0();
  for (auto& e : f.edges)
    if (std::get<0>(e) == 4 && std::get<1>(e) == 10) e = {4, 10, 5};
  return f;
}

// One candidate on y' with a harmless third color: the plain exchange works.
inline ExtensionFixture witness_b2_g1() {
  ExtensionFixture f = witness_b2_g0();
  f.edges.back() = {4, 11, 3};  // kappa = 3, no alpha edge at y''
  return f;
}

// Figure-style configuration in which both preliminary recolorings close a
// bichromatic cycle through y'' and the three-edge recoloring is needed.
inline ExtensionFixture witness_b2_g3() {
  // x=0 y=1 x1=2 y1=3 Y2=4 Y3=5 J=6 K=7 yp=8 ypp=9 Q=10 M=11 R=12 S=13
  return {14, 5, {
    {0, 1, 0},
    {0, 2, 1}, {1, 3, 1}, {1, 4, 2}, {1, 5, 3},
    {3, 8, 4}, {3, 9, 5},
    {2, 6, 4}, {6, 8, 1},
    {2, 7, 5}, {7, 9, 1},
    {4, 10, 4}, {4, 11, 3},
    {11, 5, 1}, {11, 12, 5}, {12, 13, 3}, {13, 5, 5},
  }};
}

// Only the first preliminary recoloring closes a cycle; the second one is
// valid and the present candidate goes onto the extension edge.
inline ExtensionFixture witness_b2_g2() {
  ExtensionFixture f = witness_b2_g3();
  std::erase_if(f.edges, [](const std::tuple<int, int, Color>& e) {
    int u = std::get<0>(e), v = std::get<1>(e);
    return (u == 11 && v == 12) || (u == 12 && v == 13) ||
           (u == 13 && v == 5);
  });
  return f;
}

// No neighbor of y besides y1 sees either candidate.
inline ExtensionFixture witness_b3() {
  // x=0 y=1 x1=2 y1=3 Y2=4 Y3=5 J=6 K=7 yp=8 ypp=9 L=10
  return {11, 5, {
    {0, 1, 0},
    {0, 2, 1}, {1, 3, 1}, {1, 4, 2}, {1, 5, 3},
    {3, 8, 4}, {3, 9, 5},
    {2, 6, 4}, {6, 8, 1},
    {2, 7, 5}, {7, 9, 1},
    {4, 10, 1},
  }};
}

// Two shared colors with d(y) = 4; the fourth gadget edge carries a
// candidate color, exercising the final disjunction.
inline ExtensionFixture witness_c_nu_candidate() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 G4=6 Z4=7 G5=8 Z5=9 Gp=10 U6=11 V4=12 Y3=13
  return {14, 6, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2}, {1, 13, 3},
    {2, 6, 4}, {6, 7, 1}, {7, 4, 4},
    {2, 8, 5}, {8, 9, 1}, {9, 4, 5},
    {3, 10, 6}, {10, 11, 2}, {11, 5, 6},
    {5, 12, 4},
  }};
}

// As above with the fourth gadget edge colored from y's side.
inline ExtensionFixture witness_c_nu_used() {
  ExtensionFixture f = witness_c_nu_candidate();
  f.edges.back() = {5, 12, 3};
  return f;
}

// As above with the second shared neighbor of degree 2.
inline ExtensionFixture witness_c_deg2() {
  ExtensionFixture f = witness_c_nu_candidate();
  f.edges.pop_back();
  return f;
}

// Two shared colors where only the second side carries two candidate
// colors, driving the side swap in the dispatch.
inline ExtensionFixture witness_c_swapped() {
  // x=0 y=1 x1=2 x2=3 y1=4 y2=5 Gp=6 U6=7 V3=8 G4=9 Z4=10 G5=11 Z5=12 Y3=13
  return {14, 6, {
    {0, 1, 0},
    {0, 2, 1}, {0, 3, 2}, {1, 4, 1}, {1, 5, 2}, {1, 13, 3},
    {2, 6, 6}, {6, 7, 1}, {7, 4, 6},
    {4, 8, 3},
    {3, 9, 4}, {9, 10, 2}, {10, 5, 4},
    {3, 11, 5}, {11, 12, 2}, {12, 5, 5},
  }};
}

}  // namespace aec::testing
