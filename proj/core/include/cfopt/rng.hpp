#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cfopt {

/// Seeded random source built on std::mt19937_64 with hand-rolled variate
/// conversions, so that a given seed yields the same stream of doubles on
/// every platform and standard library. Draw order matters for instance
/// reproducibility; generators document the order in which they sample.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in {lo, ..., hi} inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<double>(hi - lo + 1);
    auto k = static_cast<std::int64_t>(std::floor(uniform01() * span));
    if (k > hi - lo) k = hi - lo;
    return lo + k;
  }

  /// Standard normal via Box-Muller (pairs cached).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cfopt
