#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "wumetric/types.hpp"

namespace wu {

/// Seeded random source with a fully specified layout: all distributions are
/// derived from the mt19937_64 stream by fixed arithmetic, so identical seeds
/// give identical draws on every platform. Drawing k values and then k more
/// is the same as drawing 2k (prefix stability), which nested sampling tests
/// rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no implementation-defined library
  /// distributions).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Standard complex normal: (N + iN)/sqrt(2).
  Complex normal_complex() {
    double re = normal();
    double im = normal();
    return Complex(re * M_SQRT1_2, im * M_SQRT1_2);
  }

  Vec gaussian_vector(Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal_complex();
    return v;
  }

  /// Uniform on the unit sphere of C^n (rotation invariant).
  Vec unit_vector(Eigen::Index n) {
    for (;;) {
      Vec v = gaussian_vector(n);
      double norm = v.norm();
      if (norm > 1e-12) return v / norm;
    }
  }

  /// Uniform phase factor e^{i theta}.
  Complex phase() {
    double a = 2.0 * M_PI * uniform();
    return Complex(std::cos(a), std::sin(a));
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wu
