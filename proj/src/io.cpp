#include "wumetric/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace wu::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("parse: " + what); }

double parse_number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

const json& field_at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("complex numbers must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Vec parse_vector(const json& j) {
  if (!j.is_array() || j.empty()) bad("vectors must be non-empty arrays of [re, im] pairs");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_complex(j[i]);
  return v;
}

Mat parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) bad("matrices must be non-empty arrays of rows");
  std::size_t cols = 0;
  Mat m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    Vec row = parse_vector(j[r]);
    if (r == 0) {
      cols = static_cast<std::size_t>(row.size());
      m.resize(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    } else if (static_cast<std::size_t>(row.size()) != cols) {
      bad("matrix rows have mismatched lengths");
    }
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

json matrix_to_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Seminorm parse_seminorm(const json& j) {
  std::string kind = field_at(j, "kind").get<std::string>();
  if (kind == "euclidean") {
    double scale = parse_number(field_at(j, "scale"), "scale");
    Eigen::Index dim = static_cast<Eigen::Index>(parse_number(field_at(j, "dim"), "dim"));
    return Seminorm::scaled_euclidean(scale, dim);
  }
  if (kind == "max_abs") {
    const json& cov = field_at(j, "covectors");
    if (!cov.is_array()) bad("covectors must be an array of vectors");
    if (cov.empty()) {
      Eigen::Index dim = static_cast<Eigen::Index>(parse_number(field_at(j, "dim"), "dim"));
      return Seminorm::max_abs(Mat(dim, 0));
    }
    Vec first = parse_vector(cov[0]);
    Mat covs(first.size(), static_cast<Eigen::Index>(cov.size()));
    covs.col(0) = first;
    for (std::size_t k = 1; k < cov.size(); ++k) {
      Vec a = parse_vector(cov[k]);
      if (a.size() != first.size()) bad("covectors have mismatched dimensions");
      covs.col(static_cast<Eigen::Index>(k)) = a;
    }
    return Seminorm::max_abs(std::move(covs));
  }
  if (kind == "hermitian") {
    return Seminorm::hermitian_q(HermitianForm(parse_matrix(field_at(j, "matrix"))));
  }
  if (kind == "max") {
    const json& parts = field_at(j, "parts");
    if (!parts.is_array() || parts.empty()) bad("max needs a non-empty parts array");
    std::vector<Seminorm> ps;
    for (const json& p : parts) ps.push_back(parse_seminorm(p));
    return Seminorm::max_of(std::move(ps));
  }
  if (kind == "product") {
    return Seminorm::product_max(parse_seminorm(field_at(j, "h1")),
                                 parse_seminorm(field_at(j, "h2")));
  }
  bad("unknown seminorm kind '" + kind + "'");
}

json seminorm_to_json(const Seminorm& h) {
  struct Visitor {
    json operator()(const Seminorm::HermitianQ& node) const {
      return json{{"kind", "hermitian"}, {"matrix", matrix_to_json(node.form.matrix())}};
    }
    json operator()(const Seminorm::MaxAbs& node) const {
      json cov = json::array();
      for (Eigen::Index c = 0; c < node.covectors.cols(); ++c)
        cov.push_back(vector_to_json(node.covectors.col(c)));
      json out{{"kind", "max_abs"}, {"covectors", std::move(cov)}};
      if (node.covectors.cols() == 0) out["dim"] = node.covectors.rows();
      return out;
    }
    json operator()(const Seminorm::Max& node) const {
      json parts = json::array();
      for (const Seminorm& p : node.parts) parts.push_back(seminorm_to_json(p));
      return json{{"kind", "max"}, {"parts", std::move(parts)}};
    }
    json operator()(const Seminorm::ScaledEuclidean& node) const {
      return json{{"kind", "euclidean"}, {"scale", node.scale}, {"dim", node.dim}};
    }
    json operator()(const Seminorm::Product& node) const {
      return json{{"kind", "product"},
                  {"h1", seminorm_to_json(node.factors[0])},
                  {"h2", seminorm_to_json(node.factors[1])}};
    }
    json operator()(const Seminorm::BlackBox&) const {
      throw ValidationError("serialize: black-box seminorms are not serializable");
    }
  };
  return std::visit(Visitor{}, h.node());
}

MetricField parse_field(const json& j) {
  std::string kind = field_at(j, "kind").get<std::string>();
  if (kind != "field") bad("expected an object with kind 'field'");
  std::string desc = field_at(j, "descriptor").get<std::string>();
  if (desc == "ball") {
    Eigen::Index n = static_cast<Eigen::Index>(parse_number(field_at(j, "n"), "n"));
    double radius = parse_number(field_at(j, "radius"), "radius");
    return constant_field(kobayashi_model(BallDomain{n, radius}, Vec::Zero(n)), n);
  }
  if (desc == "geps") {
    double eps = parse_number(field_at(j, "epsilon"), "epsilon");
    return constant_field(kobayashi_model(GEpsDomain{eps}, Vec::Zero(2)), 2);
  }
  if (desc == "polydisc") {
    Eigen::Index n = static_cast<Eigen::Index>(parse_number(field_at(j, "n"), "n"));
    return constant_field(kobayashi_model(PolydiscDomain{n}, Vec::Zero(n)), n);
  }
  if (desc == "ex1") return ex1_field(parse_number(field_at(j, "epsilon"), "epsilon"));
  if (desc == "ex3") {
    double c = parse_number(field_at(j, "c"), "c");
    double R = parse_number(field_at(j, "R"), "R");
    double delta = j.contains("delta") ? parse_number(j.at("delta"), "delta") : 1e-3;
    return ex3_field(c, R, delta);
  }
  if (desc == "remark") {
    if (j.contains("sequence_factor") || j.contains("limit_factor"))
      return remark_field(parse_matrix(field_at(j, "sequence_factor")),
                          parse_matrix(field_at(j, "limit_factor")));
    return remark_field();
  }
  if (desc == "constant") {
    Seminorm h = parse_seminorm(field_at(j, "seminorm"));
    Eigen::Index point_dim =
        j.contains("point_dim")
            ? static_cast<Eigen::Index>(parse_number(j.at("point_dim"), "point_dim"))
            : h.dim();
    return constant_field(std::move(h), point_dim);
  }
  bad("unknown field descriptor '" + desc + "'");
}

HomogeneousFunction parse_homogeneous(const json& j) {
  if (j.is_object() && j.contains("kind") && j.at("kind").get<std::string>() == "min_abs") {
    Mat covs = [&] {
      const json& cov = field_at(j, "covectors");
      if (!cov.is_array() || cov.empty()) bad("min_abs needs covectors");
      Vec first = parse_vector(cov[0]);
      Mat m(first.size(), static_cast<Eigen::Index>(cov.size()));
      m.col(0) = first;
      for (std::size_t k = 1; k < cov.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)) = parse_vector(cov[k]);
      return m;
    }();
    Eigen::Index dim = covs.rows();
    return HomogeneousFunction{
        [covs](const Vec& x) {
          double v = std::numeric_limits<double>::infinity();
          for (Eigen::Index c = 0; c < covs.cols(); ++c)
            v = std::min(v, std::abs(covs.col(c).dot(x)));
          return v;
        },
        dim};
  }
  return homogeneous_from_seminorm(parse_seminorm(j));
}

namespace {

std::vector<Vec> parse_queries(const json& j, Eigen::Index dim) {
  std::vector<Vec> qs;
  if (j.is_object() && j.contains("queries")) {
    for (const json& q : j.at("queries")) {
      Vec v = parse_vector(q);
      if (v.size() != dim) bad("query vector has the wrong dimension");
      qs.push_back(std::move(v));
    }
  } else {
    for (Eigen::Index i = 0; i < dim; ++i) qs.push_back(Vec::Unit(dim, i));
  }
  return qs;
}

}  // namespace

WuJob parse_wu_job(const json& j) {
  const json& sj = (j.is_object() && j.contains("seminorm")) ? j.at("seminorm") : j;
  Seminorm h = parse_seminorm(sj);
  std::vector<Vec> queries = parse_queries(j, h.dim());
  return WuJob{std::move(h), std::move(queries)};
}

MveeJob parse_mvee_job(const json& j) {
  MveeJob job;
  if (j.is_object() && j.contains("kind") && j.at("kind").get<std::string>() == "points") {
    const json& pts = field_at(j, "points");
    if (!pts.is_array() || pts.empty()) bad("points must be a non-empty array");
    std::vector<Vec> out;
    for (const json& p : pts) out.push_back(parse_vector(p));
    job.points = std::move(out);
  } else {
    job.seminorm = parse_seminorm(j);
  }
  return job;
}

BusemannJob parse_busemann_job(const json& j) {
  const json& fj = (j.is_object() && j.contains("function")) ? j.at("function") : j;
  HomogeneousFunction f = parse_homogeneous(fj);
  BusemannJob job{std::move(f), parse_queries(j, 0), 2000};
  job.queries = parse_queries(j, job.function.dim);
  if (j.is_object() && j.contains("directions"))
    job.directions = static_cast<int>(parse_number(j.at("directions"), "directions"));
  return job;
}

ScanJob parse_scan_job(const json& j) {
  if (!j.is_object()) bad("scan jobs must be objects");
  MetricField field = parse_field(field_at(j, "field"));
  Vec X = parse_vector(field_at(j, "X"));
  if (X.size() != field.fiber_dim()) bad("X has the wrong dimension for the field");

  std::vector<Vec> sequence;
  if (j.contains("sequence") && j.at("sequence").is_array()) {
    for (const json& p : j.at("sequence")) {
      Vec z = parse_vector(p);
      if (z.size() != field.point_dim()) bad("sequence point has the wrong dimension");
      sequence.push_back(std::move(z));
    }
  } else {
    int count = 40;
    if (j.contains("sequence") && j.at("sequence").is_object())
      count = static_cast<int>(parse_number(field_at(j.at("sequence"), "count"), "count"));
    sequence = field.default_sequence(count);
  }

  Vec z0 = j.contains("z0") ? parse_vector(j.at("z0")) : field.default_limit();
  if (z0.size() != field.point_dim()) bad("z0 has the wrong dimension");

  WuVariant variant = WuVariant::normalized;
  if (j.contains("variant")) {
    std::string v = j.at("variant").get<std::string>();
    if (v == "normalized" || v == "W") variant = WuVariant::normalized;
    else if (v == "unnormalized" || v == "Wtilde") variant = WuVariant::unnormalized;
    else bad("variant must be 'normalized' or 'unnormalized'");
  }
  return ScanJob{std::move(field), std::move(sequence), std::move(z0), std::move(X), variant};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string point_csv(const Vec& z) {
  std::string out;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i) out += ';';
    out += format_double(z[i].real()) + ":" + format_double(z[i].imag());
  }
  return out;
}

}  // namespace

std::string scan_csv(const ScanReport& report) {
  std::string out = "k,z,re_value\n";
  for (std::size_t k = 0; k < report.values.size(); ++k) {
    out += std::to_string(k + 1) + "," + point_csv(report.points[k]) + "," +
           format_double(report.values[k]) + "\n";
  }
  out += "# limsup=" + format_double(report.limsup_estimate) +
         " limit=" + format_double(report.limit_value) +
         " usc=" + (report.usc_violation ? std::string("1") : std::string("0")) +
         " lsc=" + (report.lsc_violation ? std::string("1") : std::string("0")) + "\n";
  return out;
}

json scan_json(const ScanReport& report) {
  json points = json::array();
  for (const Vec& z : report.points) points.push_back(vector_to_json(z));
  return json{{"points", std::move(points)},
              {"values", report.values},
              {"limit_value", report.limit_value},
              {"limsup", report.limsup_estimate},
              {"liminf", report.liminf_estimate},
              {"usc_violation", report.usc_violation},
              {"usc_gap", report.usc_gap},
              {"lsc_violation", report.lsc_violation},
              {"lsc_gap", report.lsc_gap},
              {"flag_tolerance", report.flag_tolerance}};
}

json certificate_json(const MveeCertificate& cert) {
  return json{{"dual_gap", cert.dual_gap},
              {"iterations", cert.iterations},
              {"rounds", cert.rounds},
              {"certified", cert.certified},
              {"worst_violation", cert.worst_violation},
              {"support_size", cert.support_points.size()}};
}

}  // namespace wu::io
