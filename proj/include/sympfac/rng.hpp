#pragma once

#include <cstdint>
#include <random>

namespace sympfac {

/// Deterministic random source used everywhere randomness is needed.
///
/// The generator is std::mt19937_64 seeded directly with the caller's seed.
/// Uniform doubles are derived from the top 53 bits of each 64-bit draw, so a
/// given seed produces the same stream on every platform. OS entropy is never
/// consulted.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Derive an independent stream, e.g. for a retry round.
  SeededRng fork() {
    return SeededRng(next_u64() ^ 0x9e3779b97f4a7c15ull);
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace sympfac
