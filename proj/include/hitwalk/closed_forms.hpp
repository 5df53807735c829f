#pragma once

#include "hitwalk/graph.hpp"
#include "hitwalk/rational.hpp"

namespace hitwalk {

// Closed-form hitting times, keyed to the canonical family labelings in
// families.hpp. All outputs are exact integers or rationals.

// Hitting time to a degree-k target from any of its neighbors, when the
// graph looks the same from each neighbor: 2e/k - 1 for a graph with e
// edges. Integer whenever k divides 2e.
Rational symmetric_neighbor_ht(long long edges, long long target_degree);

// Hitting time from a corner's neighbor to the corner of a dims-dimensional
// grid with side vertices per dimension: 2*(side-1)*side^(dims-1) - 1.
BigInt grid_corner_ht(int dims, int side);

// Hitting time between adjacent hypercube vertices: 2^dims - 1.
BigInt hypercube_neighbor_ht(int dims);

// Hitting time from v to its neighbor u in a tree: 2n - 1, where n counts
// the vertices on v's side once the edge (v, u) is removed.
BigInt tree_neighbor_ht(const Graph& tree, int v, int u);

// Tadpole T(k, l): hitting time from the tail end's neighbor to the end.
BigInt tadpole_end_ht(int cycle_len, int tail_len);

// Tadpole T(k, l): hitting time from any vertex w to the tail end k+l-1.
// Tail vertices at distance t from the end follow t*(2k+2l-1) - t*(t-1);
// cycle vertices follow a quadratic drop from the cycle's far side,
// s^2 for even k and s*(s+1) for odd k at distance s from the antipode(s).
BigInt tadpole_ht_to_end(int cycle_len, int tail_len, int w);

// Polynomials underlying the complete d-ary tree hitting times:
//   f_n(d) = (sum over i < n of (2n - 2i) d^i) - n,       f_0 = 0
//   g_{k,m}(d) = (sum over i < m of (2m - 2i) d^(k-i)) - m, g_{k,0} = 0
BigInt dary_f(int n, int arity);
BigInt dary_g(int k, int m, int arity);

// Complete d-ary tree of the given height: vertex at depth l to the root.
BigInt dary_to_root_ht(int arity, int height, int depth);

// Complete d-ary tree: ancestor at distance l above a leaf, to that leaf.
BigInt dary_ancestor_to_leaf_ht(int arity, int height, int distance);

// Complete d-ary tree, arbitrary level-order ids u, v. With c the lowest
// common ancestor and u', v', c' the depths:
//   f_{h-c'} - f_{h-u'} + g_{h,v'} - g_{h,c'}
BigInt dary_ht(int arity, int height, int u, int v);

}  // namespace hitwalk
