#include "doctest.h"

#include "cubsched/coloring.hpp"
#include "cubsched/error.hpp"
#include "cubsched/graph.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

using namespace cubsched;
using testutil::bridged_cubic;
using testutil::thrown_code;

namespace {

// the ten-vertex 3-chromatic instance used across the suite; its greedy
// set leaves a non-bipartite remainder, so it exercises the swap search
CubicGraph awkward10() {
  return CubicGraph::from_edges(10, {{0, 4},
                                     {0, 6},
                                     {0, 9},
                                     {1, 2},
                                     {1, 8},
                                     {1, 9},
                                     {2, 3},
                                     {2, 7},
                                     {3, 5},
                                     {3, 6},
                                     {4, 5},
                                     {4, 8},
                                     {5, 8},
                                     {6, 7},
                                     {7, 9}});
}

bool independent_in(const CubicGraph& g, const std::vector<int>& set) {
  for (int v : set)
    for (int u : set)
      if (u != v && g.adjacent(u, v)) return false;
  return true;
}

Coloring cube_431() {
  Coloring col;
  col.classes = 3;
  col.class_of.assign(8, -1);
  for (int v : {0, 3, 5, 6}) col.class_of[v] = 0;
  for (int v : {1, 2, 4}) col.class_of[v] = 1;
  col.class_of[7] = 2;
  return col;
}

}  // namespace

TEST_CASE("coloring bookkeeping: sizes, width, properness") {
  Coloring col = cube_431();
  CHECK(col.sizes() == std::array<int, 3>{4, 3, 1});
  CHECK(col.width() == 3);
  CHECK(is_proper(graphs::cube(), col));

  col.class_of[3] = 1;  // 3 and 2 are adjacent in the cube
  CHECK_FALSE(is_proper(graphs::cube(), col));

  Coloring partial;
  partial.classes = 3;
  partial.class_of.assign(8, -1);
  partial.class_of[0] = 0;
  partial.class_of[7] = 0;
  CHECK(is_proper(graphs::cube(), partial));
  CHECK(partial.sizes() == std::array<int, 3>{2, 0, 0});
}

TEST_CASE("make_size_triple sorts its arguments") {
  CHECK(make_size_triple(1, 3, 2) == SizeTriple{3, 2, 1});
  CHECK(make_size_triple(2, 2, 2) == SizeTriple{2, 2, 2});
  CHECK(make_size_triple(0, 0, 4) == SizeTriple{4, 0, 0});
}

TEST_CASE("greedy independent set picks minimum-degree vertices") {
  CHECK(greedy_independent_set(graphs::k33()) == IndependentSet{0, 1, 2});
  CHECK(greedy_independent_set(graphs::prism()) == IndependentSet{0, 4});
  CHECK(greedy_independent_set(graphs::petersen()) == IndependentSet{0, 2, 8, 9});
  CHECK(greedy_independent_set(graphs::k4()) == IndependentSet{0});
}

TEST_CASE("greedy set is independent, maximal, and at least n/4") {
  for (int n : {8, 10, 14, 20}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      CubicGraph g = random_cubic(n, seed);
      auto set = greedy_independent_set(g);
      CHECK(independent_in(g, set));
      CHECK(4 * static_cast<int>(set.size()) >= n);
      // maximality: every vertex outside has a neighbor inside
      std::vector<char> in(n, 0);
      for (int v : set) in[v] = 1;
      for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        bool blocked = false;
        for (int u : g.neighbors(v)) blocked = blocked || in[u];
        CHECK(blocked);
      }
    }
  }
}

TEST_CASE("three-coloring succeeds on every admissible connected graph") {
  auto check_colors = [](const CubicGraph& g) {
    Coloring col = brooks_three_coloring(g);
    CHECK(col.classes == 3);
    CHECK(static_cast<int>(col.class_of.size()) == g.order());
    for (int c : col.class_of) CHECK((0 <= c && c < 3));
    CHECK(is_proper(g, col));
  };
  check_colors(graphs::k33());
  check_colors(graphs::prism());
  check_colors(graphs::cube());
  check_colors(graphs::petersen());
  check_colors(awkward10());
  check_colors(bridged_cubic());  // cut vertices force the lobe path
  for (int n : {8, 12, 16})
    for (std::uint64_t seed = 0; seed < 10; ++seed) check_colors(random_cubic(n, seed));
  CHECK(thrown_code([] { brooks_three_coloring(graphs::k4()); }) == Errc::is_k4);
}

TEST_CASE("width reduction moves one vertex and keeps the middle size") {
  CubicGraph g = graphs::cube();
  Coloring start = cube_431();
  Coloring next = decrease_width_by_one(g, start);
  CHECK(is_proper(g, next));
  auto sizes = next.sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  CHECK(sizes == std::array<int, 3>{3, 3, 2});
  CHECK(next.sizes()[1] == 3);
  CHECK(next.width() == 1);
}

TEST_CASE("width reduction rejects bad inputs") {
  Coloring flat = brooks_three_coloring(graphs::cube());
  Coloring equitable = equitable_clw(graphs::cube(), flat);
  CHECK(thrown_code([&] { decrease_width_by_one(graphs::cube(), equitable); }) ==
        Errc::already_minimal_width);

  Coloring k4col;
  k4col.classes = 3;
  k4col.class_of = {0, 1, 2, 2};
  CHECK(thrown_code([&] { decrease_width_by_one(graphs::k4(), k4col); }) == Errc::excluded_graph);

  Coloring k33col;
  k33col.classes = 3;
  k33col.class_of = {0, 0, 0, 1, 1, 1};
  CHECK(thrown_code([&] { decrease_width_by_one(graphs::k33(), k33col); }) == Errc::excluded_graph);

  Coloring improper = cube_431();
  improper.class_of[1] = 0;
  CHECK_THROWS_AS(decrease_width_by_one(graphs::cube(), improper), std::invalid_argument);
}

TEST_CASE("equitable coloring reaches width at most 1 everywhere") {
  for (int n : {8, 10, 12, 14, 18}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      CubicGraph g = random_cubic(n, seed);
      Coloring col = equitable_clw(g, brooks_three_coloring(g));
      CHECK(is_proper(g, col));
      CHECK(col.width() <= 1);
    }
  }
  Coloring cube_eq = equitable_clw(graphs::cube(), cube_431());
  auto sizes = cube_eq.sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  CHECK(sizes == std::array<int, 3>{3, 3, 2});
}

TEST_CASE("size shaping hits exact targets on bipartite hosts") {
  CubicGraph g = graphs::cube();
  for (SizeTriple t : {SizeTriple{4, 4, 0}, SizeTriple{4, 3, 1}, SizeTriple{4, 2, 2},
                       SizeTriple{3, 3, 2}}) {
    Coloring col = modified_clw(g, Coloring{}, t);
    CHECK(is_proper(g, col));
    CHECK(col.sizes() == std::array<int, 3>{t.a, t.b, t.c});
  }
}

TEST_CASE("size shaping adopts a compatible starting coloring") {
  CubicGraph g = graphs::cube();
  Coloring start;
  start.classes = 3;
  start.class_of.assign(8, -1);
  for (int v : {1, 2, 4, 7}) start.class_of[v] = 0;  // one full side
  for (int v : {0, 3}) start.class_of[v] = 1;
  for (int v : {5, 6}) start.class_of[v] = 2;
  Coloring col = modified_clw(g, start, SizeTriple{4, 2, 2});
  CHECK(is_proper(g, col));
  CHECK(col.sizes() == std::array<int, 3>{4, 2, 2});
}

TEST_CASE("size shaping hits exact targets on 3-chromatic hosts") {
  CubicGraph p = graphs::petersen();
  Coloring start = brooks_three_coloring(p);
  Coloring col = modified_clw(p, start, SizeTriple{4, 3, 3});
  CHECK(is_proper(p, col));
  CHECK(col.sizes() == std::array<int, 3>{4, 3, 3});

  CubicGraph g = awkward10();
  Coloring gcol = modified_clw(g, brooks_three_coloring(g), SizeTriple{4, 3, 3});
  CHECK(is_proper(g, gcol));
  CHECK(gcol.sizes() == std::array<int, 3>{4, 3, 3});

  Coloring prism_col = modified_clw(graphs::prism(), brooks_three_coloring(graphs::prism()),
                                    SizeTriple{2, 2, 2});
  CHECK(prism_col.sizes() == std::array<int, 3>{2, 2, 2});

  // any two maximum independent sets of this graph intersect, so two
  // disjoint classes of size 4 cannot exist
  CHECK(testutil::thrown_code([&] {
          modified_clw(p, start, SizeTriple{4, 4, 2});
        }) == Errc::target_unreachable);
}

TEST_CASE("size shaping error cases") {
  CHECK(thrown_code([] {
          modified_clw(graphs::cube(), Coloring{}, SizeTriple{5, 2, 1});
        }) == Errc::target_unreachable);
  CHECK(thrown_code([] {
          modified_clw(graphs::k33(), Coloring{}, SizeTriple{3, 3, 0});
        }) == Errc::excluded_graph);
  CHECK(thrown_code([] {
          modified_clw(graphs::k4(), Coloring{}, SizeTriple{2, 1, 1});
        }) == Errc::excluded_graph);
  CHECK_THROWS_AS(modified_clw(graphs::cube(), Coloring{}, SizeTriple{1, 3, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(modified_clw(graphs::cube(), Coloring{}, SizeTriple{4, 3, 3}),
                  std::invalid_argument);
}

TEST_CASE("swap search returns the input set when it already works") {
  CubicGraph p = graphs::petersen();
  IndependentSet good{0, 2, 8, 9};
  CHECK(bipartize(p, good) == good);
}

TEST_CASE("swap search repairs the frozen awkward instance") {
  CubicGraph g = awkward10();
  IndependentSet greedy = greedy_independent_set(g);
  CHECK(greedy == IndependentSet{0, 1, 3, 7});
  IndependentSet fixed = bipartize(g, greedy);
  CHECK(fixed == IndependentSet{1, 3, 4, 7});
  CHECK(fixed.size() == greedy.size());
  CHECK(independent_in(g, fixed));
  CHECK_NOTHROW(equitable_two_coloring(residual(g, fixed).graph));
}

TEST_CASE("swap search preserves size and independence at random") {
  for (int n : {10, 12, 16, 20}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CubicGraph g = random_cubic(n, seed, GraphClass::Tricubic);
      IndependentSet greedy = greedy_independent_set(g);
      if (5 * static_cast<int>(greedy.size()) < 2 * n) continue;
      IndependentSet fixed;
      try {
        fixed = bipartize(g, greedy);
      } catch (const SolverError& e) {
        CHECK(e.code() == Errc::search_exhausted);
        continue;
      }
      CHECK(fixed.size() == greedy.size());
      CHECK(independent_in(g, fixed));
      CHECK_NOTHROW(equitable_two_coloring(residual(g, fixed).graph));
    }
  }
}

TEST_CASE("swap search rejects bad inputs") {
  CHECK(thrown_code([] { bipartize(graphs::petersen(), {0, 2}); }) == Errc::precondition_too_small);
  CHECK_THROWS_AS(bipartize(graphs::petersen(), {0, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(bipartize(graphs::petersen(), {0, 0, 2, 8}), std::invalid_argument);
}

TEST_CASE("residual keeps exactly the surviving edges") {
  CubicGraph p = graphs::petersen();
  ResidualGraph r = residual(p, {0, 2, 8, 9});
  CHECK(r.graph.order() == 6);
  CHECK(r.to_original == std::vector<int>{1, 3, 4, 5, 6, 7});
  int edge_total = 0;
  for (const auto& row : r.graph.adj) edge_total += static_cast<int>(row.size());
  CHECK(edge_total == 2 * 3);  // a perfect matching on six vertices
  auto has = [&](int u, int v) {
    const auto& row = r.graph.adj[u];
    return std::find(row.begin(), row.end(), v) != row.end();
  };
  CHECK(has(1, 2));  // host edge 3-4
  CHECK(has(0, 4));  // host edge 1-6
  CHECK(has(3, 5));  // host edge 5-7

  CHECK_THROWS_AS(residual(p, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(residual(p, {0, 99}), std::invalid_argument);
}

TEST_CASE("two-coloring balances classes within one") {
  CubicGraph p = graphs::petersen();
  Coloring col = equitable_two_coloring(residual(p, {0, 2, 8, 9}).graph);
  CHECK(col.classes == 2);
  auto sizes = col.sizes();
  CHECK(sizes[0] + sizes[1] == 6);
  CHECK(std::abs(sizes[0] - sizes[1]) <= 1);

  SimpleGraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK(thrown_code([&] { equitable_two_coloring(triangle); }) == Errc::not_bipartite);

  // two odd paths plus isolated vertices: forces the orientation logic
  SimpleGraph h(9);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(3, 4);
  h.add_edge(4, 5);
  Coloring hcol = equitable_two_coloring(h);
  auto hsizes = hcol.sizes();
  CHECK(hsizes[0] + hsizes[1] == 9);
  CHECK(std::abs(hsizes[0] - hsizes[1]) <= 1);
  for (int u = 0; u < h.order(); ++u)
    for (int v : h.adj[u]) CHECK(hcol.class_of[u] != hcol.class_of[v]);
}

TEST_CASE("two-coloring of residuals from random instances") {
  for (int n : {10, 14, 18}) {
    for (std::uint64_t seed = 20; seed < 28; ++seed) {
      CubicGraph g = random_cubic(n, seed, GraphClass::Bicubic);
      IndependentSet set = greedy_independent_set(g);
      ResidualGraph r = residual(g, set);
      Coloring col = equitable_two_coloring(r.graph);
      auto sizes = col.sizes();
      CHECK(sizes[0] + sizes[1] == r.graph.order());
      CHECK(std::abs(sizes[0] - sizes[1]) <= 1);
      for (int u = 0; u < r.graph.order(); ++u)
        for (int v : r.graph.adj[u]) CHECK(col.class_of[u] != col.class_of[v]);
    }
  }
}
