#pragma once

#include <variant>
#include <vector>

#include "hitwalk/graph.hpp"

namespace hitwalk {

// Parametric graph families with fixed vertex labelings. Downstream
// formulas depend on the labelings, so they are part of the contract:
//
//   Path             ids 0..n-1 along the path
//   Cycle            ids 0..n-1 in cyclic order
//   Grid             id = sum of c_i * side^i over coordinates c; corner = 0
//   Hypercube        id = bitmask; neighbors differ in exactly one bit
//   Star             center = 0, leaves 1..leaves
//   CompleteDaryTree level order: root = 0, children of v are v*d+1 .. v*d+d
//   Tadpole          cycle ids 0..k-1 in cyclic order with junction 0; tail
//                    ids k..k+l-1 outward, so the far end is k+l-1
//   TreeFromParents  vertex i attaches to parents[i]; parents[0] < 0 (root)

struct Path {
  int n;  // >= 1
};

struct Cycle {
  int n;  // >= 3
};

struct Grid {
  int dims;  // >= 1
  int side;  // >= 2
};

struct Hypercube {
  int dims;  // >= 1
};

struct Star {
  int leaves;  // >= 1
};

struct CompleteDaryTree {
  int arity;   // >= 2
  int height;  // >= 0, edge-distance from root to every leaf
};

struct Tadpole {
  int cycle_len;  // >= 3
  int tail_len;   // >= 1, tail vertices excluding the junction
};

struct TreeFromParents {
  std::vector<int> parents;
};

using FamilySpec = std::variant<Path, Cycle, Grid, Hypercube, Star,
                                CompleteDaryTree, Tadpole, TreeFromParents>;

// Realizes the family under its canonical labeling. Throws
// ErrorKind::invalid_parameter when the parameters are out of bounds or
// TreeFromParents does not encode a single rooted tree.
Graph generate(const FamilySpec& spec);

// Level-order id helpers for CompleteDaryTree.
long long dary_vertex_count(int arity, int height);
int dary_parent(int v, int arity);
int dary_depth(int v, int arity);
int dary_lca(int u, int v, int arity);

// Mixed-radix id helpers for Grid.
std::vector<int> grid_coords(long long id, int dims, int side);
long long grid_id(const std::vector<int>& coords, int side);

}  // namespace hitwalk
