#include "hitwalk/graph.hpp"

#include <algorithm>
#include <queue>

namespace hitwalk {

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::span<const Edge> edges, int n) {
  if (n < 0) fail(ErrorKind::invalid_parameter, "vertex count must be non-negative");

  Graph g;
  g.adj_.resize(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorKind::vertex_out_of_range,
           "edge (" + std::to_string(a) + ", " + std::to_string(b) +
               ") has an endpoint outside [0, " + std::to_string(n) + ")");
    if (a == b)
      fail(ErrorKind::self_loop, "self-loop at vertex " + std::to_string(a));
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      fail(ErrorKind::duplicate_edge,
           "duplicate edge at vertex " + std::to_string(v));
    g.m_ += static_cast<long long>(nb.size());
  }
  g.m_ /= 2;
  return g;
}

std::vector<int> component_of(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> frontier;
  seen[v] = 1;
  frontier.push(v);
  std::vector<int> comp;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    comp.push_back(u);
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return static_cast<int>(component_of(g, 0).size()) == g.vertex_count();
}

}  // namespace hitwalk
