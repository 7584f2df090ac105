#include "wumetric/wu.hpp"

#include <cmath>

namespace wu {

WuResult wu_form(const Seminorm& h, const WuOptions& opts) {
  Eigen::Index n = h.dim();
  KernelDecomposition kd = kernel_decomposition(h);
  Eigen::Index m = kd.U.dim();
  if (m == 0) {
    WuResult res{HermitianForm(Mat(0, 0), kd.U), HermitianForm(Mat::Zero(n, n)),
                 0, kd.V, MveeCertificate{}};
    return res;
  }
  auto [core, cert] = mvee_seminorm(h, kd, opts.mvee());
  Mat extended = core.ambient_matrix();
  HermitianForm normalized(static_cast<double>(m) * extended);
  return WuResult{std::move(core), std::move(normalized), m, std::move(kd.V),
                  std::move(cert)};
}

double wu_norm(const Seminorm& h, const Vec& X, const WuOptions& opts) {
  WuResult res = wu_form(h, opts);
  return gram_eval(res.normalized_form, X);
}

double wu_norm_unnormalized(const Seminorm& h, const Vec& X, const WuOptions& opts) {
  WuResult res = wu_form(h, opts);
  if (res.m == 0) return 0.0;
  return gram_eval(res.normalized_form, X) / std::sqrt(static_cast<double>(res.m));
}

Seminorm pullback(const Seminorm& h, const Mat& L) {
  if (L.rows() != L.cols() || L.rows() != h.dim())
    throw DimensionError("pullback: L must be a square matrix matching the seminorm");
  Eigen::JacobiSVD<Mat> svd(L);
  double smax = svd.singularValues()(0);
  double smin = svd.singularValues()(L.rows() - 1);
  if (smax <= 0.0 || smin <= 1e-12 * smax)
    throw ValidationError("pullback: L is singular");
  return compose_linear(h, L);
}

}  // namespace wu
