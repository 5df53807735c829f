#pragma once

#include <optional>
#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/rational.hpp"

namespace hitwalk {

enum class Backend { exact, floating };

// Hitting times of every vertex to a fixed target, produced by one linear
// solve. A disengaged entry marks a vertex that cannot reach the target.
template <typename Num>
struct HittingVector {
  int target = 0;
  std::vector<std::optional<Num>> values;

  const std::optional<Num>& operator[](int v) const { return values.at(v); }
  bool reachable(int v) const { return values.at(v).has_value(); }
};

using ExactHittingVector = HittingVector<Rational>;
using FloatHittingVector = HittingVector<double>;

// Solves, for the fixed target j, the system
//   h_j = 0,   h_i = 1 + (1/deg(i)) * sum over neighbors w of h_w   (i != j)
// restricted to the target's connected component, by dense Gaussian
// elimination on the reduced (component minus target) system.
ExactHittingVector hitting_times_to_exact(const Graph& g, int target);
FloatHittingVector hitting_times_to_float(const Graph& g, int target);

std::optional<Rational> hitting_time_exact(const Graph& g, int source, int target);
std::optional<double> hitting_time_float(const Graph& g, int source, int target);

// One independent solve per target, run on a small thread pool; result[j]
// is hitting_times_to_*(g, j).
std::vector<ExactHittingVector> all_pairs_exact(const Graph& g);
std::vector<FloatHittingVector> all_pairs_float(const Graph& g);

// Expected first-return time 2m/deg(v) of a connected graph with m edges.
Rational expected_return_time(const Graph& g, int v);

}  // namespace hitwalk
