#pragma once

#include "wumetric/mvee.hpp"

namespace wu {

/// Output of the Wu construction for a seminorm h: the extremal form s^h on
/// U(h), the normalized form m * s^h extended by zero to the ambient space,
/// the support dimension m, the kernel V(h), and the solver certificate.
struct WuResult {
  HermitianForm core_form;        // s^h on carrier U(h)
  HermitianForm normalized_form;  // m * s^h extended by zero, full ambient space
  Eigen::Index m = 0;             // dim U(h)
  SubspaceBasis kernel;           // V(h)
  MveeCertificate certificate;
};

struct WuOptions {
  double tol = 1e-6;
  std::uint64_t seed = 42;
  int max_updates = 100000;
  int max_rounds = 50;
  int init_count = 0;
  int probes = 48;

  MveeOptions mvee() const {
    return MveeOptions{tol, seed, max_updates, max_rounds, init_count, probes};
  }
};

/// Kernel split, minimal circumscribed ellipsoid on U(h), and assembly of
/// the normalized form. The identically-zero seminorm (m = 0) yields an
/// empty core form and a zero normalized form.
WuResult wu_form(const Seminorm& h, const WuOptions& opts = {});

/// The Wu seminorm value (Wh)(X) = q_{m s^h}(X).
double wu_norm(const Seminorm& h, const Vec& X, const WuOptions& opts = {});

/// The unnormalized variant q_{s^h}(X) (no factor m).
double wu_norm_unnormalized(const Seminorm& h, const Vec& X, const WuOptions& opts = {});

/// Structured representation of h composed with an invertible L.
Seminorm pullback(const Seminorm& h, const Mat& L);

}  // namespace wu
