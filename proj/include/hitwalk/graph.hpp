#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hitwalk/error.hpp"

namespace hitwalk {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph in adjacency-list form.
//
// Invariants, enforced at construction and never mutated afterwards:
//   - vertex ids are exactly 0..n-1
//   - adjacency lists are sorted and symmetric
//   - no self-loops, no duplicate neighbors
//   - edge_count() is exactly half the degree sum
//
// A constructed Graph is safe to share across concurrent readers.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return m_; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const;

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      fail(ErrorKind::vertex_out_of_range,
           "vertex id " + std::to_string(v) + " out of range [0, " +
               std::to_string(vertex_count()) + ")");
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  friend Graph build_graph(std::span<const Edge> edges, int n);

 private:
  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

// Builds a Graph from an edge list, rejecting self-loops, duplicate edges
// (in either orientation) and out-of-range endpoints with distinct errors.
Graph build_graph(std::span<const Edge> edges, int n);

inline Graph build_graph(std::initializer_list<Edge> edges, int n) {
  return build_graph(std::span<const Edge>(edges.begin(), edges.size()), n);
}

inline Graph build_graph(const std::vector<Edge>& edges, int n) {
  return build_graph(std::span<const Edge>(edges), n);
}

bool is_connected(const Graph& g);

// Sorted list of the vertices reachable from v (including v itself).
std::vector<int> component_of(const Graph& g, int v);

}  // namespace hitwalk
