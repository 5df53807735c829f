#include "hitwalk/families.hpp"

#include <climits>
#include <string>

namespace hitwalk {

namespace {

[[noreturn]] void bad_param(const std::string& message) {
  fail(ErrorKind::invalid_parameter, message);
}

void require(bool ok, const std::string& message) {
  if (!ok) bad_param(message);
}

Graph generate_path(const Path& p) {
  require(p.n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < p.n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(edges, p.n);
}

Graph generate_cycle(const Cycle& c) {
  require(c.n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < c.n; ++i) edges.emplace_back(i, (i + 1) % c.n);
  return build_graph(edges, c.n);
}

Graph generate_grid(const Grid& spec) {
  require(spec.dims >= 1, "grid needs dims >= 1");
  require(spec.side >= 2, "grid needs side >= 2");
  long long count = 1;
  for (int i = 0; i < spec.dims; ++i) {
    count *= spec.side;
    require(count <= INT_MAX, "grid too large");
  }
  std::vector<Edge> edges;
  // For each vertex, one edge per coordinate that can still step up.
  for (long long id = 0; id < count; ++id) {
    long long stride = 1;
    long long rest = id;
    for (int i = 0; i < spec.dims; ++i) {
      int coord = static_cast<int>(rest % spec.side);
      rest /= spec.side;
      if (coord + 1 < spec.side)
        edges.emplace_back(static_cast<int>(id), static_cast<int>(id + stride));
      stride *= spec.side;
    }
  }
  return build_graph(edges, static_cast<int>(count));
}

Graph generate_hypercube(const Hypercube& spec) {
  require(spec.dims >= 1, "hypercube needs dims >= 1");
  require(spec.dims <= 24, "hypercube too large");
  int count = 1 << spec.dims;
  std::vector<Edge> edges;
  for (int v = 0; v < count; ++v)
    for (int b = 0; b < spec.dims; ++b) {
      int u = v ^ (1 << b);
      if (v < u) edges.emplace_back(v, u);
    }
  return build_graph(edges, count);
}

Graph generate_star(const Star& spec) {
  require(spec.leaves >= 1, "star needs leaves >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= spec.leaves; ++i) edges.emplace_back(0, i);
  return build_graph(edges, spec.leaves + 1);
}

Graph generate_dary(const CompleteDaryTree& spec) {
  long long count = dary_vertex_count(spec.arity, spec.height);
  std::vector<Edge> edges;
  for (long long v = 1; v < count; ++v)
    edges.emplace_back(dary_parent(static_cast<int>(v), spec.arity),
                       static_cast<int>(v));
  return build_graph(edges, static_cast<int>(count));
}

Graph generate_tadpole(const Tadpole& spec) {
  require(spec.cycle_len >= 3, "tadpole needs cycle_len >= 3");
  require(spec.tail_len >= 1, "tadpole needs tail_len >= 1");
  int k = spec.cycle_len, l = spec.tail_len;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  edges.emplace_back(0, k);
  for (int i = 0; i + 1 < l; ++i) edges.emplace_back(k + i, k + i + 1);
  return build_graph(edges, k + l);
}

Graph generate_tree(const TreeFromParents& spec) {
  const auto& parents = spec.parents;
  int n = static_cast<int>(parents.size());
  require(n >= 1, "parent list must be non-empty");
  require(parents[0] < 0, "parents[0] must be the root sentinel (< 0)");
  for (int i = 1; i < n; ++i)
    require(parents[i] >= 0 && parents[i] < n && parents[i] != i,
            "parents[" + std::to_string(i) + "] must name another vertex");
  // Every vertex must reach the root; memoize along the way.
  std::vector<char> reaches_root(n, 0);
  reaches_root[0] = 1;
  std::vector<int> chain;
  for (int i = 1; i < n; ++i) {
    chain.clear();
    int v = i;
    while (!reaches_root[v]) {
      chain.push_back(v);
      if (static_cast<int>(chain.size()) > n)
        bad_param("parent pointers contain a cycle");
      v = parents[v];
    }
    for (int u : chain) reaches_root[u] = 1;
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(parents[i], i);
  return build_graph(edges, n);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) return generate_path(s);
        else if constexpr (std::is_same_v<T, Cycle>) return generate_cycle(s);
        else if constexpr (std::is_same_v<T, Grid>) return generate_grid(s);
        else if constexpr (std::is_same_v<T, Hypercube>) return generate_hypercube(s);
        else if constexpr (std::is_same_v<T, Star>) return generate_star(s);
        else if constexpr (std::is_same_v<T, CompleteDaryTree>) return generate_dary(s);
        else if constexpr (std::is_same_v<T, Tadpole>) return generate_tadpole(s);
        else return generate_tree(s);
      },
      spec);
}

long long dary_vertex_count(int arity, int height) {
  if (arity < 2) fail(ErrorKind::invalid_parameter, "d-ary tree needs arity >= 2");
  if (height < 0) fail(ErrorKind::invalid_parameter, "d-ary tree needs height >= 0");
  long long count = 1, level = 1;
  for (int i = 0; i < height; ++i) {
    level *= arity;
    count += level;
    if (count > INT_MAX) fail(ErrorKind::invalid_parameter, "d-ary tree too large");
  }
  return count;
}

int dary_parent(int v, int arity) { return (v - 1) / arity; }

int dary_depth(int v, int arity) {
  int depth = 0;
  while (v > 0) {
    v = dary_parent(v, arity);
    ++depth;
  }
  return depth;
}

int dary_lca(int u, int v, int arity) {
  int du = dary_depth(u, arity), dv = dary_depth(v, arity);
  while (du > dv) {
    u = dary_parent(u, arity);
    --du;
  }
  while (dv > du) {
    v = dary_parent(v, arity);
    --dv;
  }
  while (u != v) {
    u = dary_parent(u, arity);
    v = dary_parent(v, arity);
  }
  return u;
}

std::vector<int> grid_coords(long long id, int dims, int side) {
  std::vector<int> coords(dims);
  for (int i = 0; i < dims; ++i) {
    coords[i] = static_cast<int>(id % side);
    id /= side;
  }
  return coords;
}

long long grid_id(const std::vector<int>& coords, int side) {
  long long id = 0, stride = 1;
  for (int c : coords) {
    id += c * stride;
    stride *= side;
  }
  return id;
}

}  // namespace hitwalk
