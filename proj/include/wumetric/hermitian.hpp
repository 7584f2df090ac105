#pragma once

#include <optional>

#include "wumetric/types.hpp"

namespace wu {

/// Orthonormal basis of a subspace of C^n, stored as the columns of an
/// n x k matrix. k == 0 is the zero subspace, k == n the full space.
class SubspaceBasis {
 public:
  /// Validates orthonormality within kOrthoTol.
  SubspaceBasis(Mat vectors, Eigen::Index ambient_dim);

  static SubspaceBasis zero(Eigen::Index ambient_dim);
  /// Canonical basis of the full ambient space.
  static SubspaceBasis full(Eigen::Index ambient_dim);

  const Mat& vectors() const { return vectors_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return vectors_.cols(); }

 private:
  Mat vectors_;
  Eigen::Index ambient_dim_;
};

/// Positive-semidefinite Hermitian form. The matrix lives on `carrier`
/// (an orthonormal subspace basis); without a carrier it acts on the whole
/// canonical C^n. Construction symmetrizes (S + S*)/2 after checking the
/// asymmetry is below kHermitianSymTol, and verifies eigenvalues are
/// >= -kPsdTol relative to the largest.
class HermitianForm {
 public:
  explicit HermitianForm(Mat matrix,
                         std::optional<SubspaceBasis> carrier = std::nullopt);

  static HermitianForm identity(Eigen::Index m);
  static HermitianForm diagonal(const RealVec& d);

  const Mat& matrix() const { return matrix_; }
  /// Dimension of the space the matrix acts on.
  Eigen::Index dim() const { return matrix_.rows(); }
  /// Dimension of the surrounding space vectors are given in.
  Eigen::Index ambient_dim() const;
  bool has_proper_carrier() const;
  const std::optional<SubspaceBasis>& carrier() const { return carrier_; }

  /// The same form as a matrix on the full ambient space (extension by zero
  /// off the carrier).
  Mat ambient_matrix() const;

 private:
  Mat matrix_;
  std::optional<SubspaceBasis> carrier_;
};

/// q_S(X) = sqrt(X* S X). X is given in ambient coordinates; if S lives on a
/// proper carrier, X must lie on it within kCarrierTol (no silent
/// projection). Tiny negative quadratic values from rounding are clamped to
/// zero; anything below the PSD tolerance throws InvariantError.
double gram_eval(const HermitianForm& S, const Vec& X);

/// Orthonormal basis of the span of eigenvectors of the Hermitian PSD
/// matrix A with eigenvalue <= tol * max(largest eigenvalue, tol-floor).
SubspaceBasis null_space(const Mat& A, double tol = kPsdTol);

/// Orthonormal basis U with V + U spanning the ambient space. V empty gives
/// the canonical basis.
SubspaceBasis ortho_complement(const SubspaceBasis& V);

/// s restricted to U x U: entries u_j* S u_k, carrier set to U. S must act
/// on the full ambient space of U.
HermitianForm restrict_form(const HermitianForm& S, const SubspaceBasis& U);

/// Lebesgue volume of the ellipsoid {q_S < 1} inside the carrier identified
/// with real dimension 2m: (pi^m / m!) / det S. Degenerate forms give
/// +infinity. The 0x0 form yields 1 (empty product).
double ellipsoid_volume(const HermitianForm& S);

}  // namespace wu
