#include "hitwalk/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "hitwalk/rng.hpp"

namespace hitwalk {

namespace {

void check_config(const WalkConfig& cfg) {
  if (cfg.trials < 1) fail(ErrorKind::invalid_parameter, "trials must be >= 1");
  if (cfg.max_steps < 1) fail(ErrorKind::invalid_parameter, "max_steps must be >= 1");
}

// One walk from `start`, stopping at `target`. Forcing the first step
// turns a hitting walk into a first-return walk when start == target.
std::optional<long long> run_walk(const Graph& g, int start, int target,
                                  bool force_first_step, long long max_steps,
                                  SplitMix64& rng) {
  int cur = start;
  long long steps = 0;
  if (force_first_step) {
    cur = g.neighbors(cur)[uniform_below(rng, g.degree(cur))];
    ++steps;
  }
  while (cur != target) {
    if (steps >= max_steps) return std::nullopt;
    cur = g.neighbors(cur)[uniform_below(rng, g.degree(cur))];
    ++steps;
  }
  return steps;
}

WalkEstimate aggregate(const Graph& g, int start, int target,
                       bool force_first_step, const WalkConfig& cfg) {
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  long long completed = 0, truncated = 0;

  for (long long i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(walk_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    auto steps = run_walk(g, start, target, force_first_step, cfg.max_steps, rng);
    if (!steps) {
      ++truncated;
      continue;
    }
    auto s = static_cast<unsigned __int128>(*steps);
    sum += s;
    sum_sq += s * s;
    ++completed;
  }
  if (completed == 0)
    fail(ErrorKind::all_walks_truncated,
         "every walk hit the step cap of " + std::to_string(cfg.max_steps));

  WalkEstimate est;
  est.trials_completed = completed;
  est.truncated = truncated;
  const long double n = static_cast<long double>(completed);
  const long double s1 = static_cast<long double>(sum);
  const long double s2 = static_cast<long double>(sum_sq);
  est.mean = static_cast<double>(s1 / n);
  if (completed > 1) {
    long double var = (s2 - s1 * s1 / n) / (n - 1);
    if (var < 0) var = 0;  // guard tiny negative from rounding
    est.std_error = static_cast<double>(std::sqrt(var / n));
  }
  return est;
}

}  // namespace

WalkEstimate simulate_hitting_time(const Graph& g, int source, int target,
                                   const WalkConfig& cfg) {
  g.check_vertex(source);
  g.check_vertex(target);
  check_config(cfg);
  if (source != target) {
    std::vector<int> comp = component_of(g, target);
    if (!std::binary_search(comp.begin(), comp.end(), source))
      fail(ErrorKind::unreachable,
           "vertex " + std::to_string(source) + " cannot reach " +
               std::to_string(target));
  }
  return aggregate(g, source, target, /*force_first_step=*/false, cfg);
}

WalkEstimate simulate_return_time(const Graph& g, int v, const WalkConfig& cfg) {
  g.check_vertex(v);
  check_config(cfg);
  if (g.degree(v) == 0)
    fail(ErrorKind::isolated_vertex,
         "vertex " + std::to_string(v) + " has no neighbors");
  return aggregate(g, v, v, /*force_first_step=*/true, cfg);
}

}  // namespace hitwalk
