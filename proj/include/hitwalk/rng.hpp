#pragma once

#include <cstdint>

namespace hitwalk {

// SplitMix64: state advances by the golden-ratio increment, output is a
// murmur-style finalizer of the state. Small, fast, and fully specified
// here so results are reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Seed for walk number `walk_index` under a master seed: the
// (walk_index+1)-th output of SplitMix64 seeded with the master seed.
// Walks therefore have independent streams regardless of execution order.
inline std::uint64_t walk_seed(std::uint64_t master_seed, std::uint64_t walk_index) {
  return SplitMix64(master_seed + walk_index * 0x9E3779B97F4A7C15ull).next();
}

// Uniform draw from [0, n), n >= 1, free of modulo bias: values below
// 2^64 mod n are rejected, leaving an exact multiple of n outcomes.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t n) {
  const std::uint64_t limit = (0 - n) % n;
  std::uint64_t x = rng.next();
  while (x < limit) x = rng.next();
  return x % n;
}

}  // namespace hitwalk
