// Command-line front end: parse seminorm/field descriptions, run solves and
// scans, emit tables and machine-readable results, and run the verification
// suite.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/validation error,
// 3 solver non-certification, 4 invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wumetric/io.hpp"
#include "wumetric/verify.hpp"

namespace {

using nlohmann::json;

struct GlobalConfig {
  double tol = 1e-6;
  std::uint64_t seed = 42;
  int budget = 100000;
  std::string out_path;
  std::string format = "json";
  std::string input_path;
};

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wu::ValidationError("cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw wu::ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void emit(const GlobalConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw wu::ValidationError("cannot open output file '" + cfg.out_path + "'");
  out << text;
}

std::string render(const GlobalConfig& cfg, const json& j, const std::string& csv) {
  return cfg.format == "csv" ? csv : j.dump(2) + "\n";
}

wu::WuOptions wu_options(const GlobalConfig& cfg) {
  wu::WuOptions opts;
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;
  opts.max_updates = cfg.budget;
  return opts;
}

std::string matrix_csv(const wu::Mat& m) {
  std::string out = "i,j,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out += std::to_string(r) + "," + std::to_string(c) + "," +
             wu::io::format_double(m(r, c).real()) + "," +
             wu::io::format_double(m(r, c).imag()) + "\n";
  return out;
}

int run_mvee(const GlobalConfig& cfg) {
  wu::io::MveeJob job = wu::io::parse_mvee_job(load_input(cfg.input_path));
  wu::HermitianForm form(wu::Mat::Identity(1, 1));
  wu::MveeCertificate cert;
  if (job.points) {
    auto [f, c] = wu::mvee_finite(*job.points, cfg.tol, cfg.budget);
    form = std::move(f);
    cert = std::move(c);
  } else {
    wu::MveeOptions opts;
    opts.tol = cfg.tol;
    opts.seed = cfg.seed;
    opts.max_updates = cfg.budget;
    auto [f, c] = wu::mvee_seminorm(*job.seminorm, opts);
    form = std::move(f);
    cert = std::move(c);
  }
  double volume = wu::ellipsoid_volume(form);
  json j{{"matrix", wu::io::matrix_to_json(form.matrix())},
         {"volume", volume},
         {"certificate", wu::io::certificate_json(cert)}};
  if (form.has_proper_carrier())
    j["carrier"] = wu::io::matrix_to_json(form.carrier()->vectors());
  std::string csv = "# gap=" + wu::io::format_double(cert.dual_gap) +
                    " volume=" + wu::io::format_double(volume) +
                    " iterations=" + std::to_string(cert.iterations) +
                    " certified=" + (cert.certified ? std::string("1") : std::string("0")) +
                    "\n" + matrix_csv(form.matrix());
  emit(cfg, render(cfg, j, csv));
  if (!cert.certified) throw wu::CertificationError("solve is not certified at tol");
  return 0;
}

int run_wu(const GlobalConfig& cfg) {
  wu::io::WuJob job = wu::io::parse_wu_job(load_input(cfg.input_path));
  wu::WuResult res = wu::wu_form(job.seminorm, wu_options(cfg));
  json values = json::array();
  std::string csv;
  csv += "# m=" + std::to_string(res.m) + "\n";
  csv += "# certified=" + std::string(res.certificate.certified ? "1" : "0") + "\n";
  csv += matrix_csv(res.normalized_form.matrix());
  csv += "q,value\n";
  for (std::size_t k = 0; k < job.queries.size(); ++k) {
    double v = gram_eval(res.normalized_form, job.queries[k]);
    values.push_back(v);
    csv += std::to_string(k) + "," + wu::io::format_double(v) + "\n";
  }
  json j{{"m", res.m},
         {"kernel", wu::io::matrix_to_json(res.kernel.vectors())},
         {"shat", wu::io::matrix_to_json(res.normalized_form.matrix())},
         {"core", wu::io::matrix_to_json(res.core_form.matrix())},
         {"values", std::move(values)},
         {"certificate", wu::io::certificate_json(res.certificate)}};
  if (res.core_form.carrier())
    j["carrier"] = wu::io::matrix_to_json(res.core_form.carrier()->vectors());
  emit(cfg, render(cfg, j, csv));
  if (res.m > 0 && !res.certificate.certified)
    throw wu::CertificationError("solve is not certified at tol");
  return 0;
}

int run_busemann(const GlobalConfig& cfg) {
  wu::io::BusemannJob job = wu::io::parse_busemann_job(load_input(cfg.input_path));
  wu::Seminorm gauge = wu::busemann_seminorm(job.function, job.directions, cfg.seed);
  json values = json::array();
  std::string csv = "q,value\n";
  for (std::size_t k = 0; k < job.queries.size(); ++k) {
    double v = gauge.eval(job.queries[k]);
    values.push_back(v);
    csv += std::to_string(k) + "," + wu::io::format_double(v) + "\n";
  }
  const auto& bb = std::get<wu::Seminorm::BlackBox>(gauge.node());
  json j{{"values", std::move(values)},
         {"kernel", wu::io::matrix_to_json(bb.declared_kernel.vectors())},
         {"directions", job.directions}};
  emit(cfg, render(cfg, j, csv));
  return 0;
}

int run_scan(const GlobalConfig& cfg) {
  wu::io::ScanJob job = wu::io::parse_scan_job(load_input(cfg.input_path));
  wu::ScanReport rep =
      wu::scan(job.field, job.sequence, job.z0, job.X, wu_options(cfg), job.variant);
  emit(cfg, render(cfg, wu::io::scan_json(rep), wu::io::scan_csv(rep)));
  return 0;
}

int run_verify(const GlobalConfig& cfg) {
  wu::verify::VerifyOptions opts;
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;
  auto results = wu::verify::run_paper_verification(opts);
  std::ostringstream table;
  wu::verify::print_table(results, table);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    emit(cfg, arr.dump(2) + "\n");
    std::cerr << table.str();
  } else {
    emit(cfg, table.str());
  }
  return wu::verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-volume Hermitian ellipsoid seminorms, Busemann convexification, "
               "and semicontinuity scans"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--tol", cfg.tol, "solver tolerance in (0,1)")
      ->envname("WU_DEFAULT_TOL")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--budget", cfg.budget, "weight-update budget per solve")
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "input JSON file")->required();
  };
  CLI::App* mvee = app.add_subcommand("mvee", "minimal ellipsoid of points or a seminorm");
  add_input(mvee);
  CLI::App* wucmd = app.add_subcommand("wu", "Wu form and norm values of a seminorm");
  add_input(wucmd);
  CLI::App* bus = app.add_subcommand("busemann", "largest dominated seminorm of a "
                                                 "homogeneous function");
  add_input(bus);
  CLI::App* scan = app.add_subcommand("scan", "semicontinuity scan of a metric field");
  add_input(scan);
  app.add_subcommand("verify-paper", "run the full verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0))
      throw wu::ValidationError("tol must lie in (0, 1)");
    if (cfg.budget < 1) throw wu::ValidationError("budget must be >= 1");
    if (app.got_subcommand("mvee")) return run_mvee(cfg);
    if (app.got_subcommand("wu")) return run_wu(cfg);
    if (app.got_subcommand("busemann")) return run_busemann(cfg);
    if (app.got_subcommand("scan")) return run_scan(cfg);
    return run_verify(cfg);
  } catch (const wu::CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wu::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const wu::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
