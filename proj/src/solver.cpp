#include "hitwalk/solver.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <utility>

namespace hitwalk {

namespace {

// Dense Gaussian elimination with partial pivoting on the reduced system.
// Unknowns are the component's vertices except the target, in sorted order.
// Row for vertex u (multiplied through by deg(u)):
//   deg(u) * h_u - sum over neighbors w != target of h_w = deg(u)
template <typename Num>
std::vector<Num> solve_reduced(const Graph& g, int target,
                               const std::vector<int>& comp) {
  const int r = static_cast<int>(comp.size()) - 1;
  if (r <= 0) return {};

  std::vector<int> unknowns;
  unknowns.reserve(r);
  for (int v : comp)
    if (v != target) unknowns.push_back(v);
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < r; ++i) pos[unknowns[i]] = i;

  std::vector<std::vector<Num>> a(r, std::vector<Num>(r));
  std::vector<Num> b(r);
  for (int i = 0; i < r; ++i) {
    int u = unknowns[i];
    a[i][i] = Num(g.degree(u));
    for (int w : g.neighbors(u))
      if (w != target) a[i][pos[w]] -= Num(1);
    b[i] = Num(g.degree(u));
  }

  for (int col = 0; col < r; ++col) {
    int piv = -1;
    if constexpr (std::is_floating_point_v<Num>) {
      Num best = 0;
      for (int i = col; i < r; ++i)
        if (std::abs(a[i][col]) > best) {
          best = std::abs(a[i][col]);
          piv = i;
        }
    } else {
      // Exact arithmetic: any nonzero pivot is as good as any other, and
      // every result stays in lowest terms after each operation.
      for (int i = col; i < r; ++i)
        if (a[i][col] != Num(0)) {
          piv = i;
          break;
        }
    }
    if (piv < 0)
      fail(ErrorKind::singular_system,
           "zero pivot column in reduced hitting-time system");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (int i = col + 1; i < r; ++i) {
      if (a[i][col] == Num(0)) continue;
      Num f = a[i][col] / a[col][col];
      a[i][col] = Num(0);
      for (int j = col + 1; j < r; ++j)
        if (a[col][j] != Num(0)) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }

  std::vector<Num> x(r);
  for (int i = r; i-- > 0;) {
    Num s = std::move(b[i]);
    for (int j = i + 1; j < r; ++j)
      if (a[i][j] != Num(0)) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

template <typename Num>
HittingVector<Num> hitting_times_to_impl(const Graph& g, int target) {
  g.check_vertex(target);
  std::vector<int> comp = component_of(g, target);
  std::vector<Num> x = solve_reduced<Num>(g, target, comp);

  HittingVector<Num> hv;
  hv.target = target;
  hv.values.assign(g.vertex_count(), std::nullopt);
  hv.values[target] = Num(0);
  int i = 0;
  for (int v : comp)
    if (v != target) hv.values[v] = std::move(x[i++]);
  return hv;
}

template <typename Num>
std::vector<HittingVector<Num>> all_pairs_impl(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<HittingVector<Num>> out(n);
  if (n == 0) return out;

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto run = [&] {
    try {
      for (int j; (j = next.fetch_add(1)) < n;)
        out[j] = hitting_times_to_impl<Num>(g, j);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace

ExactHittingVector hitting_times_to_exact(const Graph& g, int target) {
  return hitting_times_to_impl<Rational>(g, target);
}

FloatHittingVector hitting_times_to_float(const Graph& g, int target) {
  return hitting_times_to_impl<double>(g, target);
}

std::optional<Rational> hitting_time_exact(const Graph& g, int source, int target) {
  g.check_vertex(source);
  return hitting_times_to_exact(g, target).values[source];
}

std::optional<double> hitting_time_float(const Graph& g, int source, int target) {
  g.check_vertex(source);
  return hitting_times_to_float(g, target).values[source];
}

std::vector<ExactHittingVector> all_pairs_exact(const Graph& g) {
  return all_pairs_impl<Rational>(g);
}

std::vector<FloatHittingVector> all_pairs_float(const Graph& g) {
  return all_pairs_impl<double>(g);
}

Rational expected_return_time(const Graph& g, int v) {
  g.check_vertex(v);
  if (g.degree(v) == 0)
    fail(ErrorKind::isolated_vertex,
         "vertex " + std::to_string(v) + " has no neighbors");
  if (!is_connected(g))
    fail(ErrorKind::disconnected, "return time requires a connected graph");
  return Rational(make_big(2 * g.edge_count()), BigInt(g.degree(v)));
}

}  // namespace hitwalk
