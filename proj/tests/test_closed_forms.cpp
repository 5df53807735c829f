#include <doctest.h>

#include "hitwalk/closed_forms.hpp"
#include "hitwalk/families.hpp"
#include "hitwalk/solver.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace hitwalk;
using hitwalk::testing::kind_of;

TEST_CASE("symmetric neighbor formula") {
  CHECK(symmetric_neighbor_ht(12, 3) == Rational(7));
  CHECK(symmetric_neighbor_ht(1, 1) == Rational(1));
  // 5-cycle adjacent pair, cross-checked against the solver.
  CHECK(symmetric_neighbor_ht(5, 2) == Rational(4));
  CHECK(*hitting_time_exact(generate(Cycle{5}), 1, 0) == Rational(4));
  // Non-integer case stays exact.
  CHECK(symmetric_neighbor_ht(5, 3) == Rational(BigInt(7), BigInt(3)));
  CHECK(kind_of([] { symmetric_neighbor_ht(0, 1); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { symmetric_neighbor_ht(1, 0); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("grid corner formula") {
  CHECK(grid_corner_ht(1, 2) == 1);
  CHECK(grid_corner_ht(2, 2) == 3);   // the 2x2 grid is a 4-cycle
  CHECK(grid_corner_ht(2, 3) == 11);  // solver-checked below
  CHECK(grid_corner_ht(3, 4) == 2 * 3 * 16 - 1);

  // The formula gives the neighbor-to-corner direction: vertex 1 is the
  // corner 0's neighbor along the first axis.
  Graph g = generate(Grid{2, 3});
  CHECK(*hitting_time_exact(g, 1, 0) == Rational(11));
  // The reverse direction differs, so the orientation matters.
  CHECK(*hitting_time_exact(g, 0, 1) != Rational(11));

  CHECK(kind_of([] { grid_corner_ht(0, 2); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { grid_corner_ht(1, 1); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("hypercube neighbor formula") {
  CHECK(hypercube_neighbor_ht(1) == 1);
  CHECK(hypercube_neighbor_ht(3) == 7);
  CHECK(hypercube_neighbor_ht(4) == 15);
  CHECK(*hitting_time_exact(generate(Hypercube{4}), 1, 0) == Rational(15));
  CHECK(kind_of([] { hypercube_neighbor_ht(0); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("tree neighbor formula") {
  CHECK(tree_neighbor_ht(generate(Path{2}), 0, 1) == 1);
  Graph star = generate(Star{3});
  CHECK(tree_neighbor_ht(star, 0, 1) == 5);  // center side has 3 vertices
  CHECK(tree_neighbor_ht(star, 1, 0) == 1);
  Graph path3 = generate(Path{3});
  CHECK(tree_neighbor_ht(path3, 1, 2) == 3);

  CHECK(kind_of([&] { tree_neighbor_ht(generate(Cycle{4}), 0, 1); }) ==
        ErrorKind::not_a_tree);
  CHECK(kind_of([&] { tree_neighbor_ht(path3, 0, 2); }) == ErrorKind::not_adjacent);
  CHECK(kind_of([&] {
          tree_neighbor_ht(build_graph({{0, 1}}, 3), 0, 1);
        }) == ErrorKind::not_a_tree);  // disconnected
}

TEST_CASE("tree neighbor matches the solver on random trees") {
  SplitMix64 rng(0x5eed0011);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + static_cast<int>(uniform_below(rng, 24));
    Graph tree = testing::random_tree(rng, n);
    auto all = all_pairs_exact(tree);
    for (int u = 0; u < n; ++u)
      for (int v : tree.neighbors(u))
        CHECK(Rational(tree_neighbor_ht(tree, v, u)) == *all[u][v]);
  }
}

TEST_CASE("tree neighbor inductive structure") {
  // h(v -> u) = 1 + sum over v's other neighbors j of (h(j -> v) + 1):
  // the step to u happens once every attempt, and each detour into a
  // subtree costs its own hitting time back plus the wasted step.
  SplitMix64 rng(0x5eed0012);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 3 + static_cast<int>(uniform_below(rng, 17));
    Graph tree = testing::random_tree(rng, n);
    for (int v = 0; v < n; ++v)
      for (int u : tree.neighbors(v)) {
        BigInt total = 1;
        for (int j : tree.neighbors(v))
          if (j != u) total += tree_neighbor_ht(tree, j, v) + 1;
        CHECK(tree_neighbor_ht(tree, v, u) == total);
      }
  }
}

TEST_CASE("tadpole end formula") {
  CHECK(tadpole_end_ht(3, 1) == 7);
  CHECK(tadpole_end_ht(4, 2) == 11);
  Graph t42 = generate(Tadpole{4, 2});
  CHECK(*hitting_time_exact(t42, 4, 5) == Rational(11));
  CHECK(kind_of([] { tadpole_end_ht(2, 1); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { tadpole_end_ht(3, 0); }) == ErrorKind::invalid_parameter);

  // Degree-1 target consistency: the end's value is 2e - 1 in disguise.
  for (int k = 3; k <= 7; ++k)
    for (int l = 1; l <= 4; ++l)
      CHECK(Rational(tadpole_end_ht(k, l)) == symmetric_neighbor_ht(k + l, 1));
}

TEST_CASE("tadpole full characterization, frozen small cases") {
  // Tadpole{3,1}: junction 0, cycle 1-2, end 3. By-hand solve of the
  // 3-unknown system gives h0=7, h1=h2=9.
  CHECK(tadpole_ht_to_end(3, 1, 3) == 0);
  CHECK(tadpole_ht_to_end(3, 1, 0) == 7);
  CHECK(tadpole_ht_to_end(3, 1, 1) == 9);
  CHECK(tadpole_ht_to_end(3, 1, 2) == 9);

  // Tadpole{4,1}: even cycle. By hand: [9, 12, 13, 12, 0].
  const int expect41[] = {9, 12, 13, 12, 0};
  for (int w = 0; w < 5; ++w) CHECK(tadpole_ht_to_end(4, 1, w) == expect41[w]);

  // Tadpole{4,2}: [20, 23, 24, 23, 11, 0].
  const int expect42[] = {20, 23, 24, 23, 11, 0};
  for (int w = 0; w < 6; ++w) CHECK(tadpole_ht_to_end(4, 2, w) == expect42[w]);

  CHECK(kind_of([] { tadpole_ht_to_end(3, 1, 4); }) == ErrorKind::vertex_out_of_range);
  CHECK(kind_of([] { tadpole_ht_to_end(3, 1, -1); }) == ErrorKind::vertex_out_of_range);
}

TEST_CASE("tadpole characterization matches the solver") {
  for (int k = 3; k <= 6; ++k)
    for (int l = 1; l <= 3; ++l) {
      Graph g = generate(Tadpole{k, l});
      int end = k + l - 1;
      auto hv = hitting_times_to_exact(g, end);
      for (int w = 0; w < g.vertex_count(); ++w)
        CHECK(Rational(tadpole_ht_to_end(k, l, w)) == *hv[w]);

      // Tail vertices at distance t follow t*H - t*(t-1).
      BigInt end_value = tadpole_end_ht(k, l);
      for (int t = 0; t < l; ++t)
        CHECK(*hv[end - t] == Rational(BigInt(t * end_value - t * (t - 1))));

      // Odd cycles: the two far vertices agree by symmetry.
      if (k % 2 == 1) CHECK(*hv[(k - 1) / 2] == *hv[(k + 1) / 2]);
    }
}

TEST_CASE("d-ary polynomials") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(dary_f(0, d) == 0);
    CHECK(dary_f(1, d) == 1);
  }
  CHECK(dary_f(2, 2) == 6);  // (4 + 2d) - 2 at d = 2

  for (int d = 2; d <= 6; ++d)
    for (int h = 1; h <= 6; ++h)
      CHECK(dary_g(h, 1, d) == 2 * big_pow(d, h) - 1);

  // Defining sum of g at k = m = 2: (4d^2 + 2d) - 2.
  CHECK(dary_g(2, 2, 2) == 18);
  CHECK(dary_g(2, 2, 3) == 40);
  CHECK(dary_g(2, 0, 5) == 0);

  CHECK(kind_of([] { dary_f(-1, 2); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { dary_f(2, 1); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { dary_g(0, 0, 2); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { dary_g(2, 3, 2); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("d-ary polynomial identities") {
  for (int d = 2; d <= 10; ++d) {
    for (int n = 2; n <= 12; ++n)
      CHECK(dary_f(n, d) == d * dary_f(n - 1, d) + (n - 1) * d + n);
    for (int h = 1; h <= 12; ++h)
      CHECK((d - 1) * (dary_f(h, d) - dary_f(h - 1, d)) + d ==
            2 * big_pow(d, h) - 1);
    for (int h = 2; h <= 12; ++h)
      for (int k = 1; k <= h - 1; ++k)
        CHECK(dary_g(h, k + 1, d) + dary_g(h, k - 1, d) - 2 * dary_g(h, k, d) ==
              2 * big_pow(d, h - k));
  }
}

TEST_CASE("d-ary to-root and ancestor-to-leaf") {
  CHECK(dary_to_root_ht(2, 3, 0) == 0);
  CHECK(dary_to_root_ht(2, 1, 1) == 1);
  CHECK(dary_to_root_ht(2, 2, 2) == 6);
  CHECK(kind_of([] { dary_to_root_ht(2, 2, 3); }) == ErrorKind::invalid_parameter);

  CHECK(dary_ancestor_to_leaf_ht(2, 2, 0) == 0);
  CHECK(dary_ancestor_to_leaf_ht(2, 1, 1) == 3);
  CHECK(dary_ancestor_to_leaf_ht(2, 2, 2) == 18);
  CHECK(kind_of([] { dary_ancestor_to_leaf_ht(2, 2, 3); }) == ErrorKind::invalid_parameter);

  // Solver confirmation on the 7-vertex binary tree: leaf 3 is at depth 2
  // under ancestors 1 and 0.
  Graph tree = generate(CompleteDaryTree{2, 2});
  auto to_root = hitting_times_to_exact(tree, 0);
  CHECK(*to_root[3] == Rational(6));
  CHECK(*to_root[1] == Rational(dary_to_root_ht(2, 2, 1)));
  auto to_leaf = hitting_times_to_exact(tree, 3);
  CHECK(*to_leaf[0] == Rational(18));
  CHECK(*to_leaf[1] == Rational(dary_ancestor_to_leaf_ht(2, 2, 1)));
}

TEST_CASE("d-ary pairwise formula") {
  CHECK(dary_ht(2, 2, 5, 5) == 0);
  CHECK(dary_ht(3, 0, 0, 0) == 0);
  // Source at depth l, target the root: reduces to the to-root value.
  for (int d : {2, 3})
    for (int h = 1; h <= 3; ++h) {
      long long count = dary_vertex_count(d, h);
      for (int u = 0; u < count; ++u)
        CHECK(dary_ht(d, h, u, 0) == dary_to_root_ht(d, h, dary_depth(u, d)));
    }

  // Every ordered pair of the 7-vertex binary tree against the solver.
  Graph tree = generate(CompleteDaryTree{2, 2});
  auto all = all_pairs_exact(tree);
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v)
      CHECK(Rational(dary_ht(2, 2, u, v)) == *all[v][u]);

  CHECK(kind_of([] { dary_ht(2, 2, 0, 7); }) == ErrorKind::vertex_out_of_range);
}
