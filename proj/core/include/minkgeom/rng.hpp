#pragma once

#include <cstdint>

namespace mink {

// splitmix64: tiny, seedable, and identical on every platform, which is all
// the sampling here needs.  All randomness in the library flows through this
// type so that reports are a pure function of their seed.
struct Rng {
  std::uint64_t state = 0;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

// the documented sub-stream derivation: index k of stream `seed` starts at
// the splitmix64 scramble of seed + (k+1) * 0x9E3779B97F4A7C15.  Used for
// per-probe and per-sample streams so parallel evaluation orders match the
// sequential one.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace mink
