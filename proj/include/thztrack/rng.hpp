#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "thztrack/common.hpp"

namespace thztrack {

/// Deterministic per-trial random stream (splitmix64 core).
///
/// Streams are derived from (seed, path...) so that independent trials get
/// independent streams regardless of execution order; the same derivation
/// always yields the same sequence on every platform.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  /// Child stream for a trial/frame/sweep coordinate.
  static RngStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = seed;
    for (std::uint64_t id : path) {
      s = mix(s ^ mix(id + 0x9e3779b97f4a7c15ULL));
    }
    return RngStream(s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller (no cached spare, so the draw count per
  /// sample is fixed and streams stay reproducible).
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Circularly-symmetric complex Gaussian with total variance `var`.
  cplx cgaussian(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace thztrack
