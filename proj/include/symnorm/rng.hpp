#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>

namespace symnorm {

/// Deterministic random source.  The engine is the standardized mt19937_64;
/// uniform and normal variates are derived from raw 64-bit draws rather than
/// std::uniform_real_distribution so that streams are identical across
/// standard library implementations.
class Rng {
 public:
  static std::string generator_name() { return "mt19937_64+boxmuller/v1"; }

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symnorm
