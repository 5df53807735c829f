#include "hitwalk/closed_forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "hitwalk/families.hpp"

namespace hitwalk {

Rational symmetric_neighbor_ht(long long edges, long long target_degree) {
  if (edges < 1) fail(ErrorKind::invalid_parameter, "edge count must be >= 1");
  if (target_degree < 1)
    fail(ErrorKind::invalid_parameter, "target degree must be >= 1");
  return Rational(make_big(2 * edges), make_big(target_degree)) - Rational(1);
}

BigInt grid_corner_ht(int dims, int side) {
  if (dims < 1) fail(ErrorKind::invalid_parameter, "grid needs dims >= 1");
  if (side < 2) fail(ErrorKind::invalid_parameter, "grid needs side >= 2");
  return 2 * (side - 1) * big_pow(side, dims - 1) - 1;
}

BigInt hypercube_neighbor_ht(int dims) {
  if (dims < 1) fail(ErrorKind::invalid_parameter, "hypercube needs dims >= 1");
  return big_pow(2, dims) - 1;
}

BigInt tree_neighbor_ht(const Graph& tree, int v, int u) {
  tree.check_vertex(v);
  tree.check_vertex(u);
  if (!is_connected(tree) || tree.edge_count() != tree.vertex_count() - 1)
    fail(ErrorKind::not_a_tree, "graph is not a tree");
  if (!tree.has_edge(v, u))
    fail(ErrorKind::not_adjacent, "vertices " + std::to_string(v) + " and " +
                                      std::to_string(u) + " are not adjacent");
  // Count v's side of the cut edge (v, u). In a tree, skipping that one
  // edge during the traversal separates the two sides.
  std::vector<char> seen(tree.vertex_count(), 0);
  std::queue<int> frontier;
  seen[v] = 1;
  frontier.push(v);
  long long side_count = 0;
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    ++side_count;
    for (int w : tree.neighbors(x)) {
      if (x == v && w == u) continue;
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
    }
  }
  return make_big(2 * side_count - 1);
}

namespace {

void check_tadpole_params(int cycle_len, int tail_len) {
  if (cycle_len < 3)
    fail(ErrorKind::invalid_parameter, "tadpole needs cycle_len >= 3");
  if (tail_len < 1)
    fail(ErrorKind::invalid_parameter, "tadpole needs tail_len >= 1");
}

}  // namespace

BigInt tadpole_end_ht(int cycle_len, int tail_len) {
  check_tadpole_params(cycle_len, tail_len);
  return make_big(2LL * cycle_len + 2LL * tail_len - 1);
}

BigInt tadpole_ht_to_end(int cycle_len, int tail_len, int w) {
  check_tadpole_params(cycle_len, tail_len);
  const long long k = cycle_len, l = tail_len;
  const long long n = k + l;
  if (w < 0 || w >= n)
    fail(ErrorKind::vertex_out_of_range,
         "vertex id " + std::to_string(w) + " out of range [0, " +
             std::to_string(n) + ")");

  const long long end_ht = 2 * k + 2 * l - 1;
  auto tail_value = [&](long long t) { return t * end_ht - t * (t - 1); };

  if (w >= k) return make_big(tail_value(n - 1 - w));  // tail, distance n-1-w
  if (w == 0) return make_big(tail_value(l));          // junction, distance l

  // Cycle vertex. The hitting time decreases quadratically with the cyclic
  // distance s from the far side of the cycle; the junction (distance k/2,
  // or (k-1)/2 for odd k) anchors the constant.
  const long long junction_ht = tail_value(l);
  if (k % 2 == 0) {
    const long long far = k / 2;
    long long d = std::abs(w - far);
    long long s = std::min(d, k - d);
    return make_big(junction_ht + far * far - s * s);
  }
  const long long a = (k - 1) / 2;  // the two far vertices are a and a+1
  auto cyc_dist = [&](long long x, long long y) {
    long long d = std::abs(x - y);
    return std::min(d, k - d);
  };
  long long s = std::min(cyc_dist(w, a), cyc_dist(w, a + 1));
  return make_big(junction_ht + a * (a + 1) - s * (s + 1));
}

BigInt dary_f(int n, int arity) {
  if (arity < 2) fail(ErrorKind::invalid_parameter, "arity must be >= 2");
  if (n < 0) fail(ErrorKind::invalid_parameter, "f index must be >= 0");
  if (n == 0) return 0;
  BigInt acc = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    acc += 2 * (n - i) * power;
    power *= arity;
  }
  return acc - n;
}

BigInt dary_g(int k, int m, int arity) {
  if (arity < 2) fail(ErrorKind::invalid_parameter, "arity must be >= 2");
  if (k < 1) fail(ErrorKind::invalid_parameter, "g index k must be >= 1");
  if (m < 0 || m > k)
    fail(ErrorKind::invalid_parameter, "g index m must satisfy 0 <= m <= k");
  if (m == 0) return 0;
  // Exponents run k, k-1, ..., k-m+1; accumulate from the smallest power up.
  BigInt acc = 0, power = big_pow(arity, k - m + 1);
  for (int i = m - 1; i >= 0; --i) {
    acc += 2 * (m - i) * power;
    power *= arity;
  }
  return acc - m;
}

BigInt dary_to_root_ht(int arity, int height, int depth) {
  if (height < 0) fail(ErrorKind::invalid_parameter, "height must be >= 0");
  if (depth < 0 || depth > height)
    fail(ErrorKind::invalid_parameter, "depth must satisfy 0 <= depth <= height");
  return dary_f(height, arity) - dary_f(height - depth, arity);
}

BigInt dary_ancestor_to_leaf_ht(int arity, int height, int distance) {
  if (height < 1) fail(ErrorKind::invalid_parameter, "height must be >= 1");
  if (distance < 0 || distance > height)
    fail(ErrorKind::invalid_parameter,
         "distance must satisfy 0 <= distance <= height");
  return dary_g(height, height, arity) -
         dary_g(height, height - distance, arity);
}

BigInt dary_ht(int arity, int height, int u, int v) {
  long long count = dary_vertex_count(arity, height);
  if (u < 0 || u >= count || v < 0 || v >= count)
    fail(ErrorKind::vertex_out_of_range,
         "vertex ids must lie in [0, " + std::to_string(count) + ")");
  if (u == v) return 0;
  int c = dary_lca(u, v, arity);
  int du = dary_depth(u, arity);
  int dv = dary_depth(v, arity);
  int dc = dary_depth(c, arity);
  return dary_f(height - dc, arity) - dary_f(height - du, arity) +
         dary_g(height, dv, arity) - dary_g(height, dc, arity);
}

}  // namespace hitwalk
