#include "wumetric/mvee.hpp"

#include <cmath>

#include "wumetric/rng.hpp"

namespace wu {

namespace {

struct AscentResult {
  Mat M;
  RealVec w;
  double max_leverage = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Newton refinement of the design weights restricted to the current support:
// maximizes log det M(w) over the simplex face, using the exact gradient
// (leverages) and Hessian (-|x_i* M^{-1} x_j|^2). Returns true if weights
// changed. Degenerate contact sets that stall first-order steps are handled
// here.
bool newton_polish(const Mat& pts, RealVec& w, Mat& M, int sweeps) {
  const Eigen::Index N = pts.cols();
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < N; ++i)
    if (w[i] > 1e-12) support.push_back(i);
  if (support.size() < 2 || support.size() > 220) return false;

  bool changed = false;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const Eigen::Index K = static_cast<Eigen::Index>(support.size());
    Mat Minv = M.inverse();
    Mat cross(K, K);  // x_i* M^{-1} x_j
    for (Eigen::Index a = 0; a < K; ++a)
      for (Eigen::Index b = 0; b < K; ++b)
        cross(a, b) = (pts.col(support[a]).adjoint() * (Minv * pts.col(support[b])))(0, 0);
    RealVec g = cross.diagonal().real();
    RealMat H = cross.cwiseAbs2();
    H.diagonal().array() += 1e-12 * H.diagonal().maxCoeff();

    // maximize g'd - d'H d / 2 subject to 1'd = 0
    Eigen::LDLT<RealMat> ldlt(H);
    RealVec ones = RealVec::Ones(K);
    RealVec Hg = ldlt.solve(g);
    RealVec H1 = ldlt.solve(ones);
    double lambda = ones.dot(Hg) / ones.dot(H1);
    RealVec d = Hg - lambda * H1;
    if (!d.allFinite() || d.cwiseAbs().maxCoeff() <= 1e-16) break;

    double alpha = 1.0;
    for (Eigen::Index a = 0; a < K; ++a)
      if (d[a] < 0.0) alpha = std::min(alpha, -w[support[a]] / d[a]);
    if (alpha <= 0.0) break;

    double base_logdet = std::log(std::abs(M.determinant()));
    bool accepted = false;
    for (int back = 0; back < 20 && !accepted; ++back) {
      RealVec wtry = w;
      for (Eigen::Index a = 0; a < K; ++a)
        wtry[support[a]] = std::max(0.0, w[support[a]] + alpha * d[a]);
      Mat Mtry = (pts * wtry.asDiagonal()) * pts.adjoint();
      Mtry = 0.5 * (Mtry + Mtry.adjoint().eval());
      double logdet = std::log(std::abs(Mtry.determinant()));
      if (std::isfinite(logdet) && logdet > base_logdet) {
        w = std::move(wtry);
        M = std::move(Mtry);
        accepted = true;
        changed = true;
      } else {
        alpha *= 0.5;
      }
    }
    if (!accepted) break;
    std::vector<Eigen::Index> next;
    for (Eigen::Index i : support)
      if (w[i] > 1e-12) next.push_back(i);
    support = std::move(next);
    if (support.size() < 2) break;
  }
  return changed;
}

// Multiplicative-weights ascent on the design dual. The primary move is a
// pairwise transfer with exact rank-2 line search: weight flows from the
// lowest-leverage support point to the point with maximal leverage. Plain
// Frank-Wolfe steps (beta = (g - m)/(m (g - 1))) serve as fallback, and a
// support-restricted Newton polish runs periodically for contact sets where
// first-order steps stall. Stops when max leverage <= m (1 + tol).
AscentResult design_ascent(const Mat& pts, double tol, int max_updates) {
  const Eigen::Index m = pts.rows();
  const Eigen::Index N = pts.cols();
  const double md = static_cast<double>(m);

  AscentResult res;
  res.w = RealVec::Constant(N, 1.0 / static_cast<double>(N));

  auto rebuild = [&](Mat& M) {
    M = (pts * res.w.asDiagonal()) * pts.adjoint();
    M = 0.5 * (M + M.adjoint().eval());
  };
  rebuild(res.M);

  {
    Eigen::SelfAdjointEigenSolver<Mat> es(res.M, Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().maxCoeff();
    if (lmax <= 0.0 || es.eigenvalues().minCoeff() <= 1e-12 * lmax)
      throw ValidationError("mvee: points do not span the ambient space");
  }

  Mat Minv(m, m);
  RealVec lev(N);
  for (int it = 0; it < max_updates; ++it) {
    if (it > 0 && it % 1024 == 0) rebuild(res.M);
    if (it > 0 && it % 64 == 0) newton_polish(pts, res.w, res.M, 8);
    Minv = res.M.inverse();
    lev = (pts.conjugate().cwiseProduct(Minv * pts)).colwise().sum().real().transpose();

    Eigen::Index jmax = 0;
    double gmax = lev.maxCoeff(&jmax);
    res.max_leverage = gmax;
    res.iterations = it;
    if (gmax <= md * (1.0 + tol)) {
      res.converged = true;
      return res;
    }

    Eigen::Index jmin = -1;
    double gmin = 0.0;
    for (Eigen::Index i = 0; i < N; ++i) {
      if (res.w[i] > 0.0 && (jmin < 0 || lev[i] < gmin)) {
        jmin = i;
        gmin = lev[i];
      }
    }

    bool stepped = false;
    if (jmin >= 0 && jmin != jmax && gmax > gmin) {
      Complex cross = (pts.col(jmax).adjoint() * (Minv * pts.col(jmin)))(0, 0);
      double denom = gmax * gmin - std::norm(cross);  // >= 0 by Cauchy-Schwarz
      double gamma = (denom > 1e-300) ? (gmax - gmin) / (2.0 * denom) : res.w[jmin];
      gamma = std::min(gamma, res.w[jmin]);
      if (gamma > 0.0) {
        res.w[jmax] += gamma;
        res.w[jmin] -= gamma;
        if (res.w[jmin] < 0.0) res.w[jmin] = 0.0;
        res.M += gamma * (pts.col(jmax) * pts.col(jmax).adjoint() -
                          pts.col(jmin) * pts.col(jmin).adjoint());
        stepped = true;
      }
    }
    if (!stepped) {
      double beta = (gmax - md) / (md * (gmax - 1.0));
      res.w *= (1.0 - beta);
      res.w[jmax] += beta;
      res.M = (1.0 - beta) * res.M + beta * (pts.col(jmax) * pts.col(jmax).adjoint());
    }
  }
  rebuild(res.M);
  Minv = res.M.inverse();
  lev = (pts.conjugate().cwiseProduct(Minv * pts)).colwise().sum().real().transpose();
  res.max_leverage = lev.maxCoeff();
  res.iterations = max_updates;
  res.converged = res.max_leverage <= md * (1.0 + tol);
  return res;
}

Mat points_to_matrix(const std::vector<Vec>& points) {
  if (points.empty()) throw ValidationError("mvee: empty point set");
  Eigen::Index m = points.front().size();
  Mat pts(m, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != m) throw DimensionError("mvee: points have mismatched dimensions");
    pts.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  return pts;
}

MveeCertificate make_certificate(const AscentResult& asc, const Mat& pts,
                                 Eigen::Index m) {
  MveeCertificate cert;
  cert.weights = asc.w;
  cert.support_points.reserve(pts.cols());
  for (Eigen::Index i = 0; i < pts.cols(); ++i) cert.support_points.push_back(pts.col(i));
  cert.dual_gap = asc.max_leverage - static_cast<double>(m);
  cert.iterations = asc.iterations;
  cert.certified = asc.converged;
  return cert;
}

}  // namespace

std::pair<HermitianForm, MveeCertificate> mvee_finite(const std::vector<Vec>& points,
                                                      double tol, int max_updates) {
  if (!(tol > 0.0 && tol < 1.0)) throw ValidationError("mvee_finite: tol must lie in (0, 1)");
  Mat pts = points_to_matrix(points);
  Eigen::Index m = pts.rows();
  AscentResult asc = design_ascent(pts, tol, max_updates);
  if (!asc.converged)
    throw CertificationError("mvee_finite: iteration cap exceeded before reaching tol");
  Mat S = asc.M.inverse() / static_cast<double>(m);
  MveeCertificate cert = make_certificate(asc, pts, m);
  cert.worst_violation = std::sqrt(asc.max_leverage / static_cast<double>(m));
  return {HermitianForm(std::move(S)), std::move(cert)};
}

namespace {

// shared implementation: multistart coordinate ascent with random-direction
// polish; extra_starts seeds the search with known contact candidates
std::pair<Vec, double> worst_violation_impl(const Seminorm& h, const HermitianForm& S,
                                            const SubspaceBasis& U, int probes,
                                            std::uint64_t seed,
                                            const std::vector<Vec>& extra_starts) {
  Eigen::Index m = U.dim();
  if (m == 0) throw ValidationError("worst_violation: support subspace is trivial");
  if (S.dim() != m) throw DimensionError("worst_violation: form does not live on U");
  const Mat& Sm = S.matrix();
  const Mat& C = U.vectors();

  auto ratio = [&](const Vec& t) -> double {
    double denom = h.eval(C * t);
    if (denom <= 1e-14 * t.norm()) return -1.0;
    double q = std::real(t.dot(Sm * t));
    return (q <= 0.0) ? 0.0 : std::sqrt(q) / denom;
  };

  Rng rng(seed);
  Vec best = C.col(0);
  double best_val = -1.0;
  const Complex steps[4] = {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)};

  int n_extra = static_cast<int>(extra_starts.size());
  int starts = static_cast<int>(m) + n_extra + std::max(probes, 0);
  for (int s = 0; s < starts; ++s) {
    Vec t;
    if (s < m) {
      t = Vec::Unit(m, s);
    } else if (s < m + n_extra) {
      t = extra_starts[static_cast<std::size_t>(s - m)];
      double norm = t.norm();
      if (norm <= 1e-14) continue;
      t /= norm;
    } else {
      t = rng.unit_vector(m);
    }
    double r = ratio(t);
    double delta = 0.5;
    int evals = 0;
    const int eval_cap = 6000 * static_cast<int>(m);
    while (delta > 1e-9 && evals < eval_cap) {
      bool improved = false;
      for (Eigen::Index k = 0; k < m; ++k) {
        for (const Complex& dir : steps) {
          Vec cand = t + delta * dir * Vec::Unit(m, k);
          cand /= cand.norm();
          double rc = ratio(cand);
          ++evals;
          if (rc > r * (1.0 + 1e-15) + 1e-300) {
            t = cand;
            r = rc;
            improved = true;
          }
        }
      }
      // random directions cross the ridges that axis steps cannot follow
      for (int k = 0; k < 2 * static_cast<int>(m); ++k) {
        Vec cand = t + delta * rng.unit_vector(m);
        cand /= cand.norm();
        double rc = ratio(cand);
        ++evals;
        if (rc > r * (1.0 + 1e-15) + 1e-300) {
          t = cand;
          r = rc;
          improved = true;
        }
      }
      if (!improved) delta *= 0.5;
    }
    if (r > best_val) {
      best_val = r;
      best = C * t;
    }
  }
  double hb = h.eval(best);
  Vec x = best / hb;
  double v = h.eval(x);
  if (std::abs(v - 1.0) > 1e-12) x /= v;
  return {std::move(x), best_val};
}

}  // namespace

std::pair<Vec, double> worst_violation(const Seminorm& h, const HermitianForm& S,
                                       const SubspaceBasis& U, int probes,
                                       std::uint64_t seed) {
  return worst_violation_impl(h, S, U, probes, seed, {});
}

std::pair<HermitianForm, MveeCertificate> mvee_seminorm(const Seminorm& h,
                                                        const MveeOptions& opts) {
  return mvee_seminorm(h, kernel_decomposition(h), opts);
}

std::pair<HermitianForm, MveeCertificate> mvee_seminorm(const Seminorm& h,
                                                        const KernelDecomposition& kd,
                                                        const MveeOptions& opts) {
  if (!(opts.tol > 0.0 && opts.tol < 1.0))
    throw ValidationError("mvee_seminorm: tol must lie in (0, 1)");
  Eigen::Index m = kd.U.dim();
  if (m == 0)
    throw ValidationError("mvee_seminorm: seminorm vanishes identically (dim U = 0)");
  const Mat& C = kd.U.vectors();
  const double md = static_cast<double>(m);
  // solve well past the requested tolerance so that downstream entrywise
  // comparisons at 10 tol keep headroom; certification is against opts.tol
  const double inner_tol = opts.tol / 32.0;

  int count = opts.init_count > 0
                  ? std::max<int>(opts.init_count, 2 * static_cast<int>(m))
                  : std::max<int>(2 * static_cast<int>(m), 4 * static_cast<int>(m * m)) + 4;
  std::vector<Vec> ambient = boundary_sample(h, kd.U, count, opts.seed);
  std::vector<Vec> coords;
  coords.reserve(ambient.size());
  for (const Vec& x : ambient) coords.push_back(C.adjoint() * x);

  AscentResult asc;
  double violation = 0.0;
  int total_updates = 0;
  int round = 0;
  for (;; ++round) {
    Mat pts = points_to_matrix(coords);
    asc = design_ascent(pts, inner_tol, opts.max_updates);
    total_updates += asc.iterations;
    Mat Score = asc.M.inverse() / md;
    HermitianForm form(std::move(Score), kd.U);
    // the heaviest design points track the contact set; use them as starts
    std::vector<Eigen::Index> order(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return asc.w[a] > asc.w[b]; });
    std::vector<Vec> contact_starts;
    for (std::size_t i = 0; i < order.size() && contact_starts.size() < 16; ++i) {
      if (asc.w[order[i]] <= 1e-6) break;
      contact_starts.push_back(coords[static_cast<std::size_t>(order[i])]);
    }
    auto [x, v] = worst_violation_impl(h, form, kd.U, opts.probes,
                                       opts.seed + 1000 + static_cast<std::uint64_t>(round),
                                       contact_starts);
    violation = v;
    if (asc.converged && v <= 1.0 + inner_tol) break;
    bool ascent_hopeless = !asc.converged && asc.max_leverage > md * (1.0 + opts.tol);
    if (ascent_hopeless || round >= opts.max_rounds) break;
    coords.push_back(C.adjoint() * x);
  }

  Mat Score = asc.M.inverse() / md;
  Mat pts = points_to_matrix(coords);
  MveeCertificate cert = make_certificate(asc, pts, m);
  // report support points in ambient coordinates
  for (Vec& p : cert.support_points) p = C * p;
  cert.iterations = total_updates;
  cert.rounds = round;
  cert.worst_violation = violation;
  cert.certified =
      asc.max_leverage <= md * (1.0 + opts.tol) && violation <= 1.0 + opts.tol;
  return {HermitianForm(std::move(Score), kd.U), std::move(cert)};
}

}  // namespace wu
