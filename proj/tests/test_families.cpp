#include <doctest.h>

#include <bit>
#include <cmath>

#include "hitwalk/families.hpp"
#include "test_util.hpp"

using namespace hitwalk;
using hitwalk::testing::kind_of;

namespace {

long long expected_edges(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> long long {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) return s.n - 1;
        else if constexpr (std::is_same_v<T, Cycle>) return s.n;
        else if constexpr (std::is_same_v<T, Grid>)
          return static_cast<long long>(s.dims) * (s.side - 1) *
                 static_cast<long long>(std::llround(std::pow(s.side, s.dims - 1)));
        else if constexpr (std::is_same_v<T, Hypercube>)
          return static_cast<long long>(s.dims) << (s.dims - 1);
        else if constexpr (std::is_same_v<T, Star>) return s.leaves;
        else if constexpr (std::is_same_v<T, CompleteDaryTree>)
          return dary_vertex_count(s.arity, s.height) - 1;
        else if constexpr (std::is_same_v<T, Tadpole>)
          return s.cycle_len + s.tail_len;
        else return static_cast<long long>(s.parents.size()) - 1;
      },
      spec);
}

}  // namespace

TEST_CASE("small family instances") {
  Graph grid22 = generate(Grid{2, 2});
  CHECK(grid22.vertex_count() == 4);
  CHECK(grid22.edge_count() == 4);  // the 2x2 grid is a 4-cycle

  Graph cube3 = generate(Hypercube{3});
  CHECK(cube3.vertex_count() == 8);
  CHECK(cube3.edge_count() == 12);

  Graph tad = generate(Tadpole{3, 2});
  CHECK(tad.vertex_count() == 5);
  CHECK(tad.edge_count() == 5);
  CHECK(tad.degree(0) == 3);  // junction: two cycle edges plus the tail

  Graph grid23 = generate(Grid{2, 3});
  CHECK(grid23.vertex_count() == 9);
  CHECK(grid23.edge_count() == 12);  // d(m-1)m^(d-1) = 2*2*3
}

TEST_CASE("edge counts across the parameter grid") {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 6; ++n) specs.push_back(Path{n});
  for (int n = 3; n <= 7; ++n) specs.push_back(Cycle{n});
  for (int d = 1; d <= 3; ++d)
    for (int m = 2; m <= 4; ++m) specs.push_back(Grid{d, m});
  for (int d = 1; d <= 6; ++d) specs.push_back(Hypercube{d});
  for (int leaves = 1; leaves <= 5; ++leaves) specs.push_back(Star{leaves});
  for (int d = 2; d <= 3; ++d)
    for (int h = 0; h <= 3; ++h) specs.push_back(CompleteDaryTree{d, h});
  for (int k = 3; k <= 6; ++k)
    for (int l = 1; l <= 4; ++l) specs.push_back(Tadpole{k, l});
  specs.push_back(TreeFromParents{{-1, 0, 0, 1, 1, 4}});

  for (const auto& spec : specs) {
    Graph g = generate(spec);
    CHECK(g.edge_count() == expected_edges(spec));
    CHECK(is_connected(g));
    long long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("hypercube adjacency is exactly the one-bit-flip relation") {
  for (int d = 1; d <= 6; ++d) {
    Graph g = generate(Hypercube{d});
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v) {
        bool one_bit = std::popcount(static_cast<unsigned>(u ^ v)) == 1;
        CHECK(g.has_edge(u, v) == (u != v && one_bit));
      }
  }
  CHECK(generate(Hypercube{4}).has_edge(0, 1));
}

TEST_CASE("grid adjacency differs by one in exactly one coordinate") {
  for (auto [d, m] : {std::pair{1, 5}, {2, 3}, {3, 3}}) {
    Graph g = generate(Grid{d, m});
    for (int u = 0; u < g.vertex_count(); ++u) {
      auto cu = grid_coords(u, d, m);
      CHECK(grid_id(cu, m) == u);
      for (int v = 0; v < g.vertex_count(); ++v) {
        auto cv = grid_coords(v, d, m);
        int diff_positions = 0;
        bool unit_diff = true;
        for (int i = 0; i < d; ++i) {
          if (cu[i] != cv[i]) {
            ++diff_positions;
            if (std::abs(cu[i] - cv[i]) != 1) unit_diff = false;
          }
        }
        CHECK(g.has_edge(u, v) == (diff_positions == 1 && unit_diff));
      }
    }
  }
}

TEST_CASE("complete d-ary tree shape") {
  for (auto [d, h] : {std::pair{2, 3}, {3, 2}, {4, 2}}) {
    Graph g = generate(CompleteDaryTree{d, h});
    CHECK(g.vertex_count() == dary_vertex_count(d, h));
    CHECK(g.degree(0) == d);
    long long leaves = 0;
    for (int v = 1; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 1) {
        ++leaves;
        CHECK(dary_depth(v, d) == h);
      } else {
        CHECK(g.degree(v) == d + 1);
      }
      CHECK(g.has_edge(v, dary_parent(v, d)));
    }
    CHECK(leaves == std::llround(std::pow(d, h)));
  }
  // Height zero is the single-vertex tree.
  CHECK(generate(CompleteDaryTree{2, 0}).vertex_count() == 1);
}

TEST_CASE("level-order helpers") {
  CHECK(dary_parent(3, 2) == 1);
  CHECK(dary_parent(6, 2) == 2);
  CHECK(dary_depth(0, 2) == 0);
  CHECK(dary_depth(6, 2) == 2);
  CHECK(dary_lca(3, 4, 2) == 1);
  CHECK(dary_lca(3, 6, 2) == 0);
  CHECK(dary_lca(1, 3, 2) == 1);  // ancestor pair
  CHECK(dary_lca(5, 5, 3) == 5);
}

TEST_CASE("tadpole labeling") {
  Graph g = generate(Tadpole{5, 3});
  // Cycle 0..4 in cyclic order, tail 5..7 outward from the junction.
  for (int i = 0; i < 5; ++i) CHECK(g.has_edge(i, (i + 1) % 5));
  CHECK(g.has_edge(0, 5));
  CHECK(g.has_edge(5, 6));
  CHECK(g.has_edge(6, 7));
  CHECK(g.degree(7) == 1);

  // Single-vertex tail: the end's neighbor is the junction itself.
  Graph g1 = generate(Tadpole{3, 1});
  CHECK(g1.degree(3) == 1);
  CHECK(g1.has_edge(3, 0));
}

TEST_CASE("tree from parent list") {
  Graph g = generate(TreeFromParents{{-1, 0, 0, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 3));
  // Parent ids may point forward as well.
  CHECK(generate(TreeFromParents{{-1, 2, 0}}).edge_count() == 2);
}

TEST_CASE("invalid family parameters are rejected") {
  CHECK(kind_of([] { generate(Path{0}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Cycle{2}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Grid{0, 3}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Grid{2, 1}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Hypercube{0}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Star{0}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(CompleteDaryTree{1, 2}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(CompleteDaryTree{2, -1}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Tadpole{2, 1}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(Tadpole{3, 0}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(TreeFromParents{{}}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(TreeFromParents{{0}}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { generate(TreeFromParents{{-1, 1}}); }) == ErrorKind::invalid_parameter);
  // 1 -> 2 -> 1 never reaches the root.
  CHECK(kind_of([] { generate(TreeFromParents{{-1, 2, 1}}); }) == ErrorKind::invalid_parameter);
}
