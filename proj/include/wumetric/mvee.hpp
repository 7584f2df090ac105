#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wumetric/seminorm.hpp"

namespace wu {

/// Optimality witness for a minimal-volume solve. With M = sum_i w_i x_i x_i*
/// the returned form is S = M^{-1}/m; the dual gap is
/// max_i x_i* M^{-1} x_i - m, which bounds the log-det suboptimality by
/// m log(1 + gap/m).
struct MveeCertificate {
  RealVec weights;                  // nonnegative, sum to 1, aligned with support_points
  std::vector<Vec> support_points;  // every point the solve saw
  double dual_gap = 0.0;
  int iterations = 0;
  int rounds = 0;            // cutting-plane rounds (0 for a plain finite solve)
  bool certified = true;     // false when a budget ran out first
  double worst_violation = 0.0;  // last separation value sup q_S on the sampled boundary
};

struct MveeOptions {
  double tol = 1e-6;
  std::uint64_t seed = 42;
  int max_updates = 100000;  // weight updates per finite solve
  int max_rounds = 50;       // cutting-plane rounds
  int init_count = 0;        // boundary samples to start from; 0 = automatic
  int probes = 48;           // multistart count for the separation oracle
};

/// Minimal-volume circumscribed Hermitian ellipsoid of a finite point set:
/// the PSD form S maximizing det S subject to x_i* S x_i <= 1. Points must
/// span C^m. Throws CertificationError when the update budget runs out.
std::pair<HermitianForm, MveeCertificate> mvee_finite(const std::vector<Vec>& points,
                                                      double tol,
                                                      int max_updates = 100000);

/// Minimal ellipsoid of the indicatrix of h restricted to U(h), solved by a
/// cutting-plane loop around mvee_finite with the separation oracle
/// worst_violation. The returned form lives on the carrier U(h). When a
/// budget is exhausted the best form is returned with certified = false.
std::pair<HermitianForm, MveeCertificate> mvee_seminorm(const Seminorm& h,
                                                        const MveeOptions& opts = {});

/// Variant that reuses a precomputed kernel decomposition.
std::pair<HermitianForm, MveeCertificate> mvee_seminorm(const Seminorm& h,
                                                        const KernelDecomposition& kd,
                                                        const MveeOptions& opts);

/// Best-effort separation oracle: a boundary point x of I(h) on U
/// approximately maximizing q_S(x), found by seeded multistart plus
/// coordinate ascent over directions. Returns (x, q_S(x)); the value is a
/// lower bound for the true supremum.
std::pair<Vec, double> worst_violation(const Seminorm& h, const HermitianForm& S,
                                       const SubspaceBasis& U, int probes,
                                       std::uint64_t seed);

}  // namespace wu
