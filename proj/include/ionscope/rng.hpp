#pragma once

#include <cstdint>

namespace ionscope::rng {

// All randomness in the project derives from the splitmix64 finalizer below
// (multiply-xorshift constants 0x9e3779b97f4a7c15, 0xbf58476d1ce4e5b9,
// 0x94d049bb133111eb). Draws are pure functions of (seed, counter), so
// sequences are reproducible bit for bit on any platform and trials can be
// assigned independent streams without shared generator state.

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stream seed for subtask `index` of a master seed: mix64(master ^ mix64(index)).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index));
}

/// Counter-based uniform draw in [0, 1), 53 mantissa bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix64(seed ^ mix64(counter)) >> 11) * 0x1.0p-53;
}

/// Counter-based uniform integer in [1, n].
inline int uniform_index1(std::uint64_t seed, std::uint64_t counter, int n) {
  const int v = 1 + static_cast<int>(uniform01(seed, counter) * n);
  return v > n ? n : v;
}

}  // namespace ionscope::rng
