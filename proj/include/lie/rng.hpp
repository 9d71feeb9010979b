#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lie {

/// Deterministic random source. Gaussian draws use Box-Muller on raw
/// uniforms so that streams do not depend on the standard library's
/// distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double gaussian() {
    double u1 = 1.0 - uniform();  // in (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Uniform integer in [0, n).
  std::uint64_t integer(std::uint64_t n) {
    return engine_() % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lie
