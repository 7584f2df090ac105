#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wumetric/fields.hpp"

namespace wu::io {

using json = nlohmann::json;

// Complex numbers are always [re, im] pairs; vectors are arrays of pairs,
// matrices arrays of rows.
Complex parse_complex(const json& j);
Vec parse_vector(const json& j);
Mat parse_matrix(const json& j);
json complex_to_json(const Complex& z);
json vector_to_json(const Vec& v);
json matrix_to_json(const Mat& m);

/// Seminorm schema: {"kind":"euclidean","scale":c,"dim":n},
/// {"kind":"max_abs","covectors":[vec,...]}, {"kind":"hermitian","matrix":mat},
/// {"kind":"max","parts":[...]}, {"kind":"product","h1":...,"h2":...}.
Seminorm parse_seminorm(const json& j);
json seminorm_to_json(const Seminorm& h);

/// Field schema: {"kind":"field","descriptor":"ex1","epsilon":0.5} and the
/// ball/geps/polydisc/ex3/remark/constant descriptors.
MetricField parse_field(const json& j);

/// Homogeneous function: any seminorm object, or the non-convex
/// {"kind":"min_abs","covectors":[...]} (value min_j |<X, a_j>|).
HomogeneousFunction parse_homogeneous(const json& j);

struct WuJob {
  Seminorm seminorm;
  std::vector<Vec> queries;  // defaults to the canonical basis
};
WuJob parse_wu_job(const json& j);

struct MveeJob {
  std::optional<std::vector<Vec>> points;  // {"kind":"points","points":[...]}
  std::optional<Seminorm> seminorm;        // any seminorm object
};
MveeJob parse_mvee_job(const json& j);

struct BusemannJob {
  HomogeneousFunction function;
  std::vector<Vec> queries;
  int directions = 2000;
};
BusemannJob parse_busemann_job(const json& j);

struct ScanJob {
  MetricField field;
  std::vector<Vec> sequence;
  Vec z0;
  Vec X;
  WuVariant variant = WuVariant::normalized;
};
ScanJob parse_scan_job(const json& j);

/// Fixed "%.12g" rendering used by every CSV writer (byte-stable output).
std::string format_double(double v);

std::string scan_csv(const ScanReport& report);
json scan_json(const ScanReport& report);

json certificate_json(const MveeCertificate& cert);

}  // namespace wu::io
