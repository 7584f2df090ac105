#include "wumetric/fields.hpp"

#include <cmath>

namespace wu {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool at_point(const Vec& z, const Vec& p) { return (z - p).norm() <= 1e-14; }

Seminorm geps_model(double eps, Eigen::Index n) {
  // max(||X||, |X_1| / eps)
  Mat cov = Mat::Zero(n, 1);
  cov(0, 0) = 1.0 / eps;
  std::vector<Seminorm> parts;
  parts.push_back(Seminorm::scaled_euclidean(1.0, n));
  parts.push_back(Seminorm::max_abs(std::move(cov)));
  return Seminorm::max_of(std::move(parts));
}

}  // namespace

Seminorm kobayashi_model(const ModelDescriptor& descriptor, const Vec& z) {
  return std::visit(
      overloaded{
          [&](const BallDomain& d) {
            if (d.n <= 0 || d.radius <= 0.0)
              throw ValidationError("kobayashi_model: bad ball parameters");
            if (z.size() != d.n || z.norm() > 1e-14)
              throw ValidationError("kobayashi_model: ball model is only known at the center");
            return Seminorm::scaled_euclidean(1.0 / d.radius, d.n);
          },
          [&](const GEpsDomain& d) {
            if (!(d.eps > 0.0 && d.eps < 1.0 / std::sqrt(2.0)))
              throw ValidationError("kobayashi_model: eps must lie in (0, 1/sqrt(2))");
            if (z.size() != 2 || z.norm() > 1e-14)
              throw ValidationError("kobayashi_model: G_eps model is only known at 0");
            return geps_model(d.eps, 2);
          },
          [&](const PolydiscDomain& d) {
            if (d.n <= 0) throw ValidationError("kobayashi_model: bad polydisc dimension");
            if (z.size() != d.n || z.norm() > 1e-14)
              throw ValidationError("kobayashi_model: polydisc model is only known at the center");
            return Seminorm::max_abs(Mat::Identity(d.n, d.n));
          },
      },
      descriptor);
}

MetricField::MetricField(std::function<Seminorm(const Vec&)> assign,
                         Eigen::Index point_dim, Eigen::Index fiber_dim,
                         Vec default_limit)
    : assign_(std::move(assign)),
      point_dim_(point_dim),
      fiber_dim_(fiber_dim),
      default_limit_(std::move(default_limit)) {
  if (point_dim_ <= 0 || fiber_dim_ <= 0)
    throw DimensionError("MetricField: dimensions must be positive");
  if (default_limit_.size() != point_dim_)
    throw DimensionError("MetricField: default limit has the wrong dimension");
}

Seminorm MetricField::at(const Vec& z) const {
  if (z.size() != point_dim_) throw DimensionError("MetricField: point dimension mismatch");
  Seminorm h = assign_(z);
  if (h.dim() != fiber_dim_)
    throw InvariantError("MetricField: assignment produced the wrong fiber dimension");
  return h;
}

std::vector<Vec> MetricField::default_sequence(int count) const {
  std::vector<Vec> seq;
  seq.reserve(count);
  for (int k = 1; k <= count; ++k) {
    Vec z = default_limit_;
    z[0] += 1.0 / static_cast<double>(k);
    seq.push_back(std::move(z));
  }
  return seq;
}

MetricField constant_field(Seminorm h, Eigen::Index point_dim) {
  Eigen::Index fiber = h.dim();
  auto assign = [h = std::move(h)](const Vec&) { return h; };
  return MetricField(std::move(assign), point_dim, fiber, Vec::Zero(point_dim));
}

MetricField ex1_field(double eps) {
  if (!(eps > 0.0 && eps < 1.0 / std::sqrt(2.0)))
    throw ValidationError("ex1_field: eps must lie in (0, 1/sqrt(2))");
  auto assign = [eps](const Vec& z) {
    if (z.norm() <= 1e-14) return geps_model(eps, 2);
    return Seminorm::scaled_euclidean(1.0, 2);
  };
  return MetricField(std::move(assign), 2, 2, Vec::Zero(2));
}

MetricField ex3_field(double c, double R, double delta) {
  if (!(c > 0.0)) throw ValidationError("ex3_field: c must be positive");
  if (!(R > std::sqrt(2.0) / c))
    throw ValidationError("ex3_field: R must exceed sqrt(2)/c");
  if (!(delta > 0.0 && delta * R < 1.0 / std::sqrt(2.0)))
    throw ValidationError("ex3_field: delta must satisfy 0 < delta R < 1/sqrt(2)");
  auto assign = [c, R, delta](const Vec& z) {
    if (at_point(z, Vec::Zero(2))) return Seminorm::scaled_euclidean(c, 2);
    // max((1/R) |X_2|, delta ||X||)
    Mat cov = Mat::Zero(2, 1);
    cov(1, 0) = 1.0 / R;
    std::vector<Seminorm> parts;
    parts.push_back(Seminorm::max_abs(std::move(cov)));
    parts.push_back(Seminorm::scaled_euclidean(delta, 2));
    return Seminorm::max_of(std::move(parts));
  };
  return MetricField(std::move(assign), 2, 2, Vec::Zero(2));
}

MetricField remark_field() {
  Mat rank1 = Mat::Zero(2, 2);
  rank1(0, 0) = 1.0;
  return remark_field(rank1, Mat::Identity(2, 2));
}

MetricField remark_field(const Mat& sequence_factor, const Mat& limit_factor) {
  HermitianForm seq_form{Mat(sequence_factor)};
  HermitianForm lim_form{Mat(limit_factor)};
  if (seq_form.dim() != 2 || lim_form.dim() != 2)
    throw DimensionError("remark_field: factors must be 2x2");
  auto assign = [seq_form, lim_form](const Vec& z) {
    const HermitianForm& factor = at_point(z, Vec::Zero(3)) ? lim_form : seq_form;
    return Seminorm::product_max(Seminorm::hermitian_q(factor),
                                 Seminorm::scaled_euclidean(1.0, 1));
  };
  return MetricField(std::move(assign), 3, 3, Vec::Zero(3));
}

double wu_field(const MetricField& field, const Vec& z, const Vec& X,
                const WuOptions& opts, WuVariant variant, int busemann_directions) {
  Seminorm h = field.at(z);
  if (std::holds_alternative<Seminorm::BlackBox>(h.node())) {
    // opaque assignments may be non-convex; convexify first
    h = busemann_seminorm(homogeneous_from_seminorm(h), busemann_directions, opts.seed);
  }
  return variant == WuVariant::normalized ? wu_norm(h, X, opts)
                                          : wu_norm_unnormalized(h, X, opts);
}

ScanReport scan(const MetricField& field, const std::vector<Vec>& sequence,
                const Vec& z0, const Vec& X, const WuOptions& opts, WuVariant variant) {
  if (sequence.size() < 20)
    throw ValidationError("scan: sequences must have at least 20 points");
  ScanReport report;
  report.points = sequence;
  report.values.reserve(sequence.size());
  for (const Vec& z : sequence) report.values.push_back(wu_field(field, z, X, opts, variant));
  report.limit_value = wu_field(field, z0, X, opts, variant);

  std::size_t tail_start = sequence.size() / 2;
  report.limsup_estimate = report.values[tail_start];
  report.liminf_estimate = report.values[tail_start];
  for (std::size_t k = tail_start; k < report.values.size(); ++k) {
    report.limsup_estimate = std::max(report.limsup_estimate, report.values[k]);
    report.liminf_estimate = std::min(report.liminf_estimate, report.values[k]);
  }
  report.flag_tolerance = 10.0 * opts.tol;
  if (report.limsup_estimate > report.limit_value + report.flag_tolerance) {
    report.usc_violation = true;
    report.usc_gap = report.limsup_estimate - report.limit_value;
  }
  if (report.liminf_estimate < report.limit_value - report.flag_tolerance) {
    report.lsc_violation = true;
    report.lsc_gap = report.limit_value - report.liminf_estimate;
  }
  return report;
}

}  // namespace wu
