#pragma once

#include <variant>

#include "wumetric/busemann.hpp"
#include "wumetric/wu.hpp"

namespace wu {

/// Closed-form model descriptors for which a pointwise metric value is known.
struct BallDomain {
  Eigen::Index n;
  double radius;
};
struct GEpsDomain {  // {z in B_2 : |z_1| < eps}
  double eps;
};
struct PolydiscDomain {
  Eigen::Index n;
};
using ModelDescriptor = std::variant<BallDomain, GEpsDomain, PolydiscDomain>;

/// Model value of the Kobayashi-Royden metric at the supported base points
/// (domain centers). Never extrapolates to other points.
Seminorm kobayashi_model(const ModelDescriptor& descriptor, const Vec& z);

enum class WuVariant {
  normalized,    // W h = q_{m s^h}
  unnormalized,  // q_{s^h}
};

/// A pointwise assignment z -> seminorm description on a domain, together
/// with a default scan target (limit point and approach sequence).
class MetricField {
 public:
  MetricField(std::function<Seminorm(const Vec&)> assign, Eigen::Index point_dim,
              Eigen::Index fiber_dim, Vec default_limit);

  Seminorm at(const Vec& z) const;
  Eigen::Index point_dim() const { return point_dim_; }
  Eigen::Index fiber_dim() const { return fiber_dim_; }
  const Vec& default_limit() const { return default_limit_; }
  /// z_k = (1/k, 0, ...) -> default limit, k = 1..count.
  std::vector<Vec> default_sequence(int count) const;

 private:
  std::function<Seminorm(const Vec&)> assign_;
  Eigen::Index point_dim_;
  Eigen::Index fiber_dim_;
  Vec default_limit_;
};

/// Constant field assigning the same seminorm everywhere.
MetricField constant_field(Seminorm h, Eigen::Index point_dim);

/// The upper semicontinuous metric of the discontinuity example on B_2:
/// Euclidean off the origin, max(||X||, |X_1|/eps) at the origin.
MetricField ex1_field(double eps);

/// Synthetic stand-in field with the scan behaviour of a pinched domain:
/// max((1/R)|X_2|, delta ||X||) along the approach set and c ||X|| at the
/// limit point. Requires R > sqrt(2)/c and delta R < 1/sqrt(2). This is an
/// explicit model of those bounds, not the metric of an actual domain.
MetricField ex3_field(double c, double R, double delta = 1e-3);

/// Field on C^3 contrasting the normalized and unnormalized operators:
/// product of a rank-1 factor with |.| along the approach set, and of a
/// full-rank factor with |.| at the limit. Factors may be overridden with
/// any PSD 2x2 matrices of the stated ranks.
MetricField remark_field();
MetricField remark_field(const Mat& sequence_factor, const Mat& limit_factor);

/// (W eta)(z; X): assignment, Busemann convexification for black-box
/// assignments (structured assignments are already convex and skip it), then
/// the Wu norm.
double wu_field(const MetricField& field, const Vec& z, const Vec& X,
                const WuOptions& opts = {}, WuVariant variant = WuVariant::normalized,
                int busemann_directions = 400);

/// Semicontinuity scan along a sequence z_k -> z0.
struct ScanReport {
  std::vector<Vec> points;
  std::vector<double> values;
  double limit_value = 0.0;
  double limsup_estimate = 0.0;   // max over the tail half
  double liminf_estimate = 0.0;   // min over the tail half
  bool usc_violation = false;
  double usc_gap = 0.0;           // limsup - limit when flagged
  bool lsc_violation = false;
  double lsc_gap = 0.0;           // limit - liminf when flagged
  double flag_tolerance = 0.0;    // 10 * solver tol
};

/// Evaluates the Wu field along the sequence and at z0 and flags
/// semicontinuity violations beyond 10 * tol. Sequences must have at least
/// 20 points; the caller asserts convergence to z0.
ScanReport scan(const MetricField& field, const std::vector<Vec>& sequence,
                const Vec& z0, const Vec& X, const WuOptions& opts = {},
                WuVariant variant = WuVariant::normalized);

}  // namespace wu
