#include "wumetric/hermitian.hpp"

#include <cmath>
#include <limits>

namespace wu {

namespace {

double max_abs(const Mat& A) {
  if (A.size() == 0) return 0.0;
  return A.cwiseAbs().maxCoeff();
}

}  // namespace

SubspaceBasis::SubspaceBasis(Mat vectors, Eigen::Index ambient_dim)
    : vectors_(std::move(vectors)), ambient_dim_(ambient_dim) {
  if (ambient_dim_ <= 0) throw DimensionError("SubspaceBasis: ambient_dim must be positive");
  if (vectors_.size() != 0 && vectors_.rows() != ambient_dim_)
    throw DimensionError("SubspaceBasis: vector length does not match ambient_dim");
  if (vectors_.size() == 0 && vectors_.cols() == 0) vectors_.resize(ambient_dim_, 0);
  if (vectors_.cols() > ambient_dim_)
    throw DimensionError("SubspaceBasis: more vectors than ambient dimension");
  if (vectors_.cols() > 0) {
    Mat gram = vectors_.adjoint() * vectors_;
    gram -= Mat::Identity(vectors_.cols(), vectors_.cols());
    if (max_abs(gram) > kOrthoTol)
      throw ValidationError("SubspaceBasis: vectors are not orthonormal");
  }
}

SubspaceBasis SubspaceBasis::zero(Eigen::Index ambient_dim) {
  return SubspaceBasis(Mat(ambient_dim, 0), ambient_dim);
}

SubspaceBasis SubspaceBasis::full(Eigen::Index ambient_dim) {
  return SubspaceBasis(Mat::Identity(ambient_dim, ambient_dim), ambient_dim);
}

HermitianForm::HermitianForm(Mat matrix, std::optional<SubspaceBasis> carrier)
    : matrix_(std::move(matrix)), carrier_(std::move(carrier)) {
  if (matrix_.rows() != matrix_.cols())
    throw DimensionError("HermitianForm: matrix must be square");
  if (carrier_ && carrier_->dim() != matrix_.rows())
    throw DimensionError("HermitianForm: carrier dimension does not match matrix");
  if (matrix_.rows() == 0) return;
  double scale = std::max(1.0, max_abs(matrix_));
  Mat asym = matrix_ - matrix_.adjoint();
  if (max_abs(asym) > kHermitianSymTol * scale)
    throw InvariantError("HermitianForm: matrix is not Hermitian");
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Mat> es(matrix_, Eigen::EigenvaluesOnly);
  double lmax = es.eigenvalues().maxCoeff();
  double lmin = es.eigenvalues().minCoeff();
  if (lmin < -kPsdTol * std::max(1.0, lmax))
    throw InvariantError("HermitianForm: matrix is not positive semidefinite");
}

HermitianForm HermitianForm::identity(Eigen::Index m) {
  return HermitianForm(Mat::Identity(m, m));
}

HermitianForm HermitianForm::diagonal(const RealVec& d) {
  Mat m = Mat::Zero(d.size(), d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianForm(std::move(m));
}

Eigen::Index HermitianForm::ambient_dim() const {
  return carrier_ ? carrier_->ambient_dim() : matrix_.rows();
}

bool HermitianForm::has_proper_carrier() const {
  return carrier_ && carrier_->dim() < carrier_->ambient_dim();
}

Mat HermitianForm::ambient_matrix() const {
  if (!carrier_) return matrix_;
  return carrier_->vectors() * matrix_ * carrier_->vectors().adjoint();
}

double gram_eval(const HermitianForm& S, const Vec& X) {
  if (X.size() != S.ambient_dim())
    throw DimensionError("gram_eval: vector dimension does not match the form");
  Vec t;
  if (S.carrier()) {
    const Mat& C = S.carrier()->vectors();
    t = C.adjoint() * X;
    if (S.has_proper_carrier()) {
      double off = (X - C * t).norm();
      if (off > kCarrierTol * std::max(1.0, X.norm()))
        throw ValidationError("gram_eval: vector has a component off the carrier");
    }
  } else {
    t = X;
  }
  if (t.size() == 0) return 0.0;
  double q = std::real(t.dot(S.matrix() * t));
  if (q < 0.0) {
    double scale = std::max(1.0, max_abs(S.matrix()) * t.squaredNorm());
    if (q < -kPsdTol * scale)
      throw InvariantError("gram_eval: quadratic form significantly negative (non-PSD matrix)");
    q = 0.0;
  }
  return std::sqrt(q);
}

SubspaceBasis null_space(const Mat& A, double tol) {
  if (A.rows() != A.cols()) throw DimensionError("null_space: matrix must be square");
  if (tol <= 0.0) throw ValidationError("null_space: tol must be positive");
  Eigen::Index n = A.rows();
  double scale = std::max(1.0, max_abs(A));
  if (max_abs(Mat(A - A.adjoint())) > kHermitianSymTol * scale)
    throw InvariantError("null_space: matrix is not Hermitian");
  Mat H = 0.5 * (A + A.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  const RealVec& ev = es.eigenvalues();  // ascending
  double lmax = ev[n - 1];
  double thr = (lmax > tol) ? tol * lmax : tol;
  Eigen::Index k = 0;
  while (k < n && ev[k] <= thr) ++k;
  return SubspaceBasis(es.eigenvectors().leftCols(k), n);
}

SubspaceBasis ortho_complement(const SubspaceBasis& V) {
  Eigen::Index n = V.ambient_dim();
  if (V.dim() == 0) return SubspaceBasis::full(n);
  if (V.dim() == n) return SubspaceBasis::zero(n);
  Mat P = V.vectors() * V.vectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> es(P);
  // Projector eigenvalues are ~0 on the complement, ~1 on V.
  Eigen::Index k = n - V.dim();
  return SubspaceBasis(es.eigenvectors().leftCols(k), n);
}

HermitianForm restrict_form(const HermitianForm& S, const SubspaceBasis& U) {
  if (S.carrier() && S.has_proper_carrier())
    throw DimensionError("restrict_form: form must act on the full ambient space");
  if (S.dim() != U.ambient_dim())
    throw DimensionError("restrict_form: form and subspace dimensions do not match");
  Mat restricted = U.vectors().adjoint() * S.matrix() * U.vectors();
  return HermitianForm(std::move(restricted), U);
}

double ellipsoid_volume(const HermitianForm& S) {
  Eigen::Index m = S.dim();
  if (m == 0) return 1.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(S.matrix(), Eigen::EigenvaluesOnly);
  const RealVec& ev = es.eigenvalues();
  double lmax = ev[m - 1];
  if (lmax <= 0.0 || ev[0] <= 1e-12 * lmax)
    return std::numeric_limits<double>::infinity();
  double det = 1.0;
  double ball = 1.0;  // pi^m / m!
  for (Eigen::Index i = 0; i < m; ++i) {
    det *= ev[i];
    ball *= M_PI / static_cast<double>(i + 1);
  }
  return ball / det;
}

}  // namespace wu
