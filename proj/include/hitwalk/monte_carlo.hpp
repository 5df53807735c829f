#pragma once

#include <cstdint>

#include "hitwalk/graph.hpp"

namespace hitwalk {

struct WalkConfig {
  std::uint64_t seed = 0;
  long long trials = 1;
  long long max_steps = 10'000'000;  // per-walk step cap
};

// Sample mean and standard error of first-hit step counts. Walks that hit
// the step cap without reaching the target are counted in `truncated` and
// excluded from the mean; any truncation invalidates the estimate.
struct WalkEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  long long trials_completed = 0;
  long long truncated = 0;

  bool valid() const { return truncated == 0; }
};

// Mean first-hit time over cfg.trials independent walks from source.
// Deterministic: walk i draws from SplitMix64(walk_seed(cfg.seed, i)), so
// identical inputs give bit-identical estimates, and aggregation uses
// order-insensitive integer sums.
WalkEstimate simulate_hitting_time(const Graph& g, int source, int target,
                                   const WalkConfig& cfg);

// Mean first-return time to v (the walk leaves v, steps counted until it
// is back). Same determinism contract as simulate_hitting_time.
WalkEstimate simulate_return_time(const Graph& g, int v, const WalkConfig& cfg);

}  // namespace hitwalk
