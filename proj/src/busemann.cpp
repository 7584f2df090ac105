#include "wumetric/busemann.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "wumetric/rng.hpp"

namespace wu {

namespace {

RealVec realify(const Vec& z) {
  RealVec r(2 * z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    r[2 * i] = z[i].real();
    r[2 * i + 1] = z[i].imag();
  }
  return r;
}

Vec complexify(const RealVec& r, Eigen::Index n) {
  Vec z(n);
  for (Eigen::Index i = 0; i < n; ++i) z[i] = Complex(r[2 * i], r[2 * i + 1]);
  return z;
}

/// Minkowski gauge of the balanced convex hull of the sampled boundary
/// points plus the cone over the recession directions, inside the
/// realification of C^n. Solved as
///   max lambda  s.t.  sum_i Re-combination of e^{i theta} p_i  = lambda x,
///                     total point mass <= 1,
/// by a primal simplex whose entering column is generated on the fly: the
/// reduced cost of the phase family e^{i theta} p is maximized in closed
/// form over theta, so the optimum is taken over every phase multiple, not a
/// discretization. Unbounded lambda means x lies in the recession cone.
class HullGauge {
 public:
  HullGauge(Mat points, Mat rays) : points_(std::move(points)), rays_(std::move(rays)) {
    n_ = points_.rows() > 0 ? points_.rows() : rays_.rows();
  }

  double operator()(const Vec& z) const {
    if (z.size() != n_) throw DimensionError("hull gauge: dimension mismatch");
    double norm = z.norm();
    if (norm <= 1e-300) return 0.0;
    double lambda = solve_lp(z / norm);
    if (lambda < 0.0) return 0.0;  // recession direction
    if (lambda <= 1e-12) throw InvariantError("hull gauge: sampled hull does not span");
    return norm / lambda;
  }

 private:
  struct Col {
    int kind;           // 0 point, 1 ray, 2 lambda, 3 slack
    Eigen::Index idx;   // orbit index for kinds 0/1
    Complex phase;      // unit phase for kinds 0/1
  };

  void materialize(const Col& c, const Vec& x, RealVec& out) const {
    const Eigen::Index d = 2 * n_;
    out.setZero(d + 1);
    switch (c.kind) {
      case 0:
        out.head(d) = realify(c.phase * points_.col(c.idx));
        out[d] = 1.0;
        break;
      case 1:
        out.head(d) = realify(c.phase * rays_.col(c.idx));
        break;
      case 2:
        out.head(d) = -realify(x);
        break;
      default:
        out[d] = 1.0;
    }
  }

  // returns optimal lambda for a unit query, or -1 when unbounded
  double solve_lp(const Vec& x) const {
    const Eigen::Index d = 2 * n_;
    const Eigen::Index rows = d + 1;

    // initial feasible basis: the +Re/+Im axis columns contributed by the
    // basis directions (orbit i < n), plus the mass slack
    std::vector<Col> basis;
    for (Eigen::Index i = 0; i < n_; ++i) {
      int kind = axis_is_ray_[static_cast<std::size_t>(i)] ? 1 : 0;
      basis.push_back(Col{kind, axis_idx_[static_cast<std::size_t>(i)], Complex(1, 0)});
      basis.push_back(Col{kind, axis_idx_[static_cast<std::size_t>(i)], Complex(0, 1)});
    }
    basis.push_back(Col{3, 0, Complex(1, 0)});

    // slightly perturbed right-hand side to break structural degeneracy
    RealVec b = RealVec::Zero(rows);
    for (Eigen::Index i = 0; i < d; ++i) b[i] = 1e-13 * static_cast<double>(i + 1);
    b[rows - 1] = 1.0;

    RealMat B(rows, rows);
    RealVec col(rows), y(rows), u(rows), xb(rows), cb(rows);
    const int max_iters = 20000;
    for (int iter = 0; iter < max_iters; ++iter) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        materialize(basis[static_cast<std::size_t>(i)], x, col);
        B.col(i) = col;
        cb[i] = basis[static_cast<std::size_t>(i)].kind == 2 ? 1.0 : 0.0;
      }
      Eigen::PartialPivLU<RealMat> lu(B);
      xb = lu.solve(b);
      y = lu.transpose().solve(cb);
      Vec yc = complexify(y.head(d), n_);
      double ylast = y[rows - 1];

      // closed-form pricing over each phase family
      Col enter{-1, 0, Complex(1, 0)};
      double best_rc = 1e-9;
      for (Eigen::Index i = 0; i < points_.cols(); ++i) {
        Complex w = yc.dot(points_.col(i));  // conj(yc) . p
        double rc = std::abs(w) - ylast;
        if (rc > best_rc) {
          best_rc = rc;
          Complex ph = (std::abs(w) > 0) ? Complex(-std::conj(w) / std::abs(w)) : Complex(1, 0);
          enter = Col{0, i, ph};
        }
      }
      for (Eigen::Index j = 0; j < rays_.cols(); ++j) {
        Complex w = yc.dot(rays_.col(j));
        double rc = std::abs(w);
        if (rc > best_rc) {
          best_rc = rc;
          Complex ph = Complex(-std::conj(w) / std::abs(w));
          enter = Col{1, j, ph};
        }
      }
      {
        bool lambda_basic = false;
        for (const Col& c : basis) lambda_basic |= (c.kind == 2);
        if (!lambda_basic) {
          double rc = 1.0 + std::real(yc.dot(x));
          if (rc > best_rc) {
            best_rc = rc;
            enter = Col{2, 0, Complex(1, 0)};
          }
        }
        double rc_slack = -ylast;
        bool slack_basic = false;
        for (const Col& c : basis) slack_basic |= (c.kind == 3);
        if (!slack_basic && rc_slack > best_rc) {
          best_rc = rc_slack;
          enter = Col{3, 0, Complex(1, 0)};
        }
      }
      if (enter.kind < 0) {
        for (Eigen::Index i = 0; i < rows; ++i)
          if (basis[static_cast<std::size_t>(i)].kind == 2) return xb[i];
        return 0.0;
      }

      materialize(enter, x, col);
      u = lu.solve(col);
      Eigen::Index leave = -1;
      double theta = 0.0;
      for (Eigen::Index i = 0; i < rows; ++i) {
        if (u[i] > 1e-11) {
          double t = xb[i] / u[i];
          if (leave < 0 || t < theta) {
            leave = i;
            theta = t;
          }
        }
      }
      if (leave < 0) return -1.0;  // unbounded: recession direction
      basis[static_cast<std::size_t>(leave)] = enter;
    }
    throw InvariantError("hull gauge: simplex iteration cap exceeded");
  }

 public:
  // orbit index and type backing the +axis columns of each complex
  // coordinate; filled by the builder (basis directions come first)
  std::vector<bool> axis_is_ray_;
  std::vector<Eigen::Index> axis_idx_;

 private:
  Mat points_;  // n x Np orbit representatives d/f(d)
  Mat rays_;    // n x Nr recession orbit representatives
  Eigen::Index n_;
};

}  // namespace

HomogeneousFunction homogeneous_from_seminorm(const Seminorm& h) {
  Seminorm copy = h;
  return HomogeneousFunction{[copy](const Vec& x) { return copy.eval(x); }, h.dim()};
}

void check_homogeneous(const HomogeneousFunction& f, int samples, std::uint64_t seed) {
  if (!f.evaluator) throw ValidationError("homogeneous function: evaluator required");
  if (f.dim <= 0) throw DimensionError("homogeneous function: dim must be positive");
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    Vec x = rng.unit_vector(f.dim);
    double fx = f.evaluator(x);
    if (!std::isfinite(fx) || fx < 0.0)
      throw ValidationError("homogeneous function: negative or non-finite value");
    Complex t = rng.uniform(0.1, 3.0) * rng.phase();
    double lhs = f.evaluator(t * x);
    double rhs = std::abs(t) * fx;
    if (std::abs(lhs - rhs) > 1e-9 * (1.0 + rhs))
      throw ValidationError("homogeneous function: not absolutely homogeneous");
  }
}

Seminorm busemann_seminorm(const HomogeneousFunction& f, int directions,
                           std::uint64_t seed, const BusemannOptions& opts) {
  const Eigen::Index n = f.dim;
  if (n > 4)
    throw ValidationError("busemann_seminorm: dimensions above 4 are not supported");
  if (directions < 4 * n)
    throw ValidationError("busemann_seminorm: directions must be >= 4 dim");
  check_homogeneous(f);

  Rng rng(seed);
  std::vector<Vec> dirs;
  dirs.reserve(static_cast<std::size_t>(directions) + static_cast<std::size_t>(n));
  for (Eigen::Index c = 0; c < n; ++c) dirs.push_back(Vec::Unit(n, c));
  for (int i = 0; i < directions; ++i) dirs.push_back(rng.unit_vector(n));

  std::vector<Vec> point_orbits, ray_orbits;
  std::vector<bool> axis_is_ray(n);
  std::vector<Eigen::Index> axis_idx(n);
  for (std::size_t di = 0; di < dirs.size(); ++di) {
    const Vec& d = dirs[di];
    double v = f.evaluator(d);
    if (!std::isfinite(v) || v > 1e12)
      throw ValidationError("busemann_seminorm: function unbounded on the unit sphere");
    bool is_ray = v <= 1e-12;
    if (is_ray) {
      ray_orbits.push_back(d);
    } else {
      point_orbits.push_back(d / v);
    }
    if (di < static_cast<std::size_t>(n)) {
      axis_is_ray[di] = is_ray;
      axis_idx[di] = is_ray ? static_cast<Eigen::Index>(ray_orbits.size()) - 1
                            : static_cast<Eigen::Index>(point_orbits.size()) - 1;
    }
  }

  Mat points(n, static_cast<Eigen::Index>(point_orbits.size()));
  for (std::size_t j = 0; j < point_orbits.size(); ++j)
    points.col(static_cast<Eigen::Index>(j)) = point_orbits[j];
  Mat rays(n, static_cast<Eigen::Index>(ray_orbits.size()));
  for (std::size_t j = 0; j < ray_orbits.size(); ++j)
    rays.col(static_cast<Eigen::Index>(j)) = ray_orbits[j];

  auto gauge = std::make_shared<HullGauge>(std::move(points), std::move(rays));
  gauge->axis_is_ray_ = std::move(axis_is_ray);
  gauge->axis_idx_ = std::move(axis_idx);

  // declared kernel: complex span of the recession directions
  Mat span = Mat::Zero(n, n);
  for (const Vec& d : ray_orbits) span += d * d.adjoint();
  SubspaceBasis kernel = SubspaceBasis::zero(n);
  if (!ray_orbits.empty()) {
    Eigen::SelfAdjointEigenSolver<Mat> es(span);
    double lmax = es.eigenvalues().maxCoeff();
    Eigen::Index k = 0;
    while (k < n && es.eigenvalues()[n - 1 - k] > 1e-10 * std::max(lmax, 1.0)) ++k;
    kernel = SubspaceBasis(es.eigenvectors().rightCols(k), n);
  }

  auto evaluator = [gauge](const Vec& x) { return (*gauge)(x); };

  if (opts.validate_samples > 0) {
    Rng vrng(seed ^ 0xd0a11ce5);
    for (int i = 0; i < opts.validate_samples; ++i) {
      Vec x = vrng.unit_vector(n);
      double g = evaluator(x);
      double fx = f.evaluator(x);
      if (g > fx + opts.domination_tol)
        throw InvariantError("busemann_seminorm: sampled gauge fails domination");
    }
  }

  BlackBoxCheck check;
  check.tolerance = 1e-6;  // balanced hull: homogeneity exact up to LP tolerance
  return Seminorm::black_box(std::move(evaluator), std::move(kernel), n, check);
}

}  // namespace wu
