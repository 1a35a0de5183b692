#pragma once

#include <cstdint>

namespace memsat {

// splitmix64 (Steele/Lea/Vigna). Used instead of std::mt19937_64 because the
// standard leaves <random> distribution output unspecified across
// implementations; every draw here is defined bit-for-bit, so seeds reproduce
// instances and trajectories on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); rejection sampling, no modulo bias
  uint64_t next_below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // uniform double in [0, 1), 53 random bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform double in [-1, 1)
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

 private:
  uint64_t state_;
};

// splitmix64 finalizer, used as a stateless hash for seed derivation
inline uint64_t seed_mix(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Child seed for (stream, index) under a base seed. Streams are independent
// enough that concurrent workers need no coordination.
inline uint64_t derive_seed(uint64_t base, uint64_t stream, uint64_t index) {
  uint64_t h = seed_mix(base + 0x9E3779B97F4A7C15ULL * (stream + 1));
  return seed_mix(h + 0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace memsat
