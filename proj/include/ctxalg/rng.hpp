#pragma once

#include <cstdint>

namespace ctxalg {

/// Counter-based pseudorandom numbers: sample i under seed s is
/// mix64(s + (i+1) * 0x9e3779b97f4a7c15), where mix64 is the SplitMix64
/// finalizer (Steele, Lea & Flood). Stateless, so any partition of the
/// counter range reproduces exactly the same stream — that is what makes
/// seed-stable parallel sampling possible.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * 0x9e3779b97f4a7c15ull);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double counter_uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(counter_bits(seed, counter) >> 11) * 0x1.0p-53;
}

/// Convenience stateful view over the counter stream; used by the tests'
/// generators as well.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_bits() { return counter_bits(seed_, counter_++); }
  double uniform01() { return counter_uniform01(seed_, counter_++); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_bits() % n; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool chance(double p) { return uniform01() < p; }

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace ctxalg
