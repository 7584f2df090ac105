#pragma once

#include <cstdint>

#include "wumetric/seminorm.hpp"

namespace wu {

/// An absolutely homogeneous function C^n -> R+, typically a pointwise
/// metric that need not be convex. Construction checks homogeneity on
/// seeded random samples.
struct HomogeneousFunction {
  std::function<double(const Vec&)> evaluator;
  Eigen::Index dim = 0;
};

HomogeneousFunction homogeneous_from_seminorm(const Seminorm& h);

/// Validates homogeneity of f probabilistically (within 1e-9 relative).
void check_homogeneous(const HomogeneousFunction& f, int samples = 64,
                       std::uint64_t seed = 0x686f6d6f);

struct BusemannOptions {
  /// Random vectors used for the post-construction domination self-check
  /// output <= f + domination_tol * ||X||; 0 disables the check.
  int validate_samples = 1000;
  double domination_tol = 2e-2;
};

/// Largest C-seminorm dominated by f, approximated as the Minkowski gauge of
/// the convex hull of the sampled indicatrix. Unit directions are drawn from
/// the rotation-invariant distribution (prefix-stable in `directions`), the
/// basis directions are always included, and every direction enters with its
/// 8 phase multiples e^{i pi k/4}. Directions where f vanishes become
/// recession rays of the hull and span the declared kernel of the returned
/// black-box seminorm. The gauge converges to the Busemann seminorm from
/// above as `directions` grows; accuracy is reported, not certified.
/// Dimensions above 4 are rejected. Requires directions >= 4 dim.
Seminorm busemann_seminorm(const HomogeneousFunction& f, int directions,
                           std::uint64_t seed, const BusemannOptions& opts = {});

}  // namespace wu
