#include "wumetric/verify.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "wumetric/io.hpp"
#include "wumetric/rng.hpp"

namespace wu::verify {

namespace {

std::string fmt(double v) { return io::format_double(v); }

double max_entry_diff(const Mat& A, const Mat& B) {
  return (A - B).cwiseAbs().maxCoeff();
}

Mat random_pd_matrix(Rng& rng, Eigen::Index n, double ridge = 0.4) {
  Mat A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = rng.normal_complex();
  Mat S = A * A.adjoint() / static_cast<double>(n) + ridge * Mat::Identity(n, n);
  return S;
}

Mat random_unitary(Rng& rng, Eigen::Index n) {
  Mat A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = rng.normal_complex();
  Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ();
  Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) Q.col(i) *= R(i, i) / std::abs(R(i, i));
  return Q;
}

// random structured seminorm of O(1) scale, possibly with a kernel
Seminorm random_structured_seminorm(Rng& rng, Eigen::Index n) {
  int kind = static_cast<int>(rng.raw() % 5);
  switch (kind) {
    case 0:
      return Seminorm::hermitian_q(HermitianForm(random_pd_matrix(rng, n)));
    case 1: {
      Eigen::Index k = n + static_cast<Eigen::Index>(rng.raw() % 3);
      Mat cov(n, k);
      for (Eigen::Index j = 0; j < k; ++j) cov.col(j) = rng.unit_vector(n) * rng.uniform(0.6, 1.8);
      return Seminorm::max_abs(std::move(cov));
    }
    case 2: {
      std::vector<Seminorm> parts;
      parts.push_back(Seminorm::scaled_euclidean(rng.uniform(0.5, 1.5), n));
      parts.push_back(Seminorm::hermitian_q(HermitianForm(random_pd_matrix(rng, n, 0.1))));
      return Seminorm::max_of(std::move(parts));
    }
    case 3: {
      if (n >= 2) {
        Eigen::Index n1 = 1 + static_cast<Eigen::Index>(rng.raw() % (n - 1));
        return Seminorm::product_max(random_structured_seminorm(rng, n1),
                                     random_structured_seminorm(rng, n - n1));
      }
      return Seminorm::scaled_euclidean(rng.uniform(0.5, 2.0), n);
    }
    default: {
      // rank-deficient max_abs: kernel of dimension >= 1 when n >= 2
      if (n >= 2) {
        Eigen::Index k = n - 1;
        Mat cov(n, k);
        for (Eigen::Index j = 0; j < k; ++j)
          cov.col(j) = rng.unit_vector(n) * rng.uniform(0.6, 1.8);
        return Seminorm::max_abs(std::move(cov));
      }
      return Seminorm::scaled_euclidean(rng.uniform(0.5, 2.0), n);
    }
  }
}

struct Check {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& msg) {
    if (!ok && pass) {
      pass = false;
      note = msg;
    }
  }
};

using CriterionFn = std::function<void(const VerifyOptions&, Check&, std::string&)>;

CriterionResult run_one(int id, const std::string& name, const VerifyOptions& opts,
                        const CriterionFn& fn) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  Check chk;
  std::string details;
  try {
    fn(opts, chk, details);
    res.pass = chk.pass;
    res.details = chk.pass ? details : chk.note;
  } catch (const std::exception& e) {
    res.pass = false;
    res.details = std::string("exception: ") + e.what();
  }
  return res;
}

void criterion_euclidean_fixed_point(const VerifyOptions& opts, Check& chk,
                                     std::string& details) {
  const double tol = 1e-5;
  double worst = 0.0;
  for (Eigen::Index n = 1; n <= 4; ++n) {
    Seminorm h = Seminorm::scaled_euclidean(1.0, n);
    WuOptions wo;
    wo.tol = opts.tol;
    wo.seed = opts.seed;
    for (Eigen::Index j = 0; j < n; ++j) {
      double v = wu_norm(h, Vec::Unit(n, j), wo);
      worst = std::max(worst, std::abs(v - std::sqrt(static_cast<double>(n))));
    }
  }
  chk.require(worst <= tol, "max deviation " + fmt(worst) + " exceeds " + fmt(tol));
  details = "max |Wh(e_j) - sqrt(n)| = " + fmt(worst) + " over n=1..4 (tol " + fmt(tol) + ")";
}

void criterion_example0(const VerifyOptions& opts, Check& chk, std::string& details) {
  WuOptions wo;
  wo.tol = opts.tol;
  wo.seed = opts.seed;
  Vec X(2);
  X << Complex(0, 0), Complex(1, 0);

  double ball = wu_norm(kobayashi_model(BallDomain{2, 1.0}, Vec::Zero(2)), X, wo);
  chk.require(std::abs(ball - std::sqrt(2.0)) <= 1e-5,
              "ball value " + fmt(ball) + " not within 1e-5 of sqrt(2)");
  double worst = 0.0;
  for (double eps : {0.3, 0.5, 0.6}) {
    double val = wu_norm(kobayashi_model(GEpsDomain{eps}, Vec::Zero(2)), X, wo);
    double expected = 1.0 / std::sqrt(1.0 - eps * eps);
    worst = std::max(worst, std::abs(val - expected));
    chk.require(std::abs(val - expected) <= 1e-3,
                "eps=" + fmt(eps) + " value " + fmt(val) + " not within 1e-3 of " + fmt(expected));
    chk.require(ball > val, "inclusion monotonicity failed: ball value not larger");
  }
  details = "ball = " + fmt(ball) + " (expect sqrt(2), tol 1e-5); pinched-domain dev = " +
            fmt(worst) + " (tol 1e-3); strict inequality holds";
}

void criterion_mvee_correctness(const VerifyOptions& opts, Check& chk, std::string& details) {
  const double form_tol = 10.0 * opts.tol;
  Rng rng(opts.seed ^ 0x3a11);
  double worst_fix = 0.0, worst_seed = 0.0, worst_gap = 0.0;
  for (int t = 0; t < 20; ++t) {
    Eigen::Index n = 1 + static_cast<Eigen::Index>(t % 3);
    Mat S0 = random_pd_matrix(rng, n);
    Seminorm h = Seminorm::hermitian_q(HermitianForm(S0));
    MveeOptions mo;
    mo.tol = opts.tol;
    mo.seed = opts.seed;
    auto [S, cert] = mvee_seminorm(h, mo);
    chk.require(cert.certified, "solve not certified");
    chk.require(cert.dual_gap <= static_cast<double>(n) * opts.tol,
                "dual gap " + fmt(cert.dual_gap) + " above m tol");
    worst_gap = std::max(worst_gap, cert.dual_gap);
    worst_fix = std::max(worst_fix, max_entry_diff(S.ambient_matrix(), S0));
    MveeOptions mo2 = mo;
    mo2.seed = opts.seed + 1295;
    auto [S2, cert2] = mvee_seminorm(h, mo2);
    worst_seed = std::max(worst_seed, max_entry_diff(S.ambient_matrix(), S2.ambient_matrix()));
  }
  chk.require(worst_fix <= form_tol,
              "fixed-point deviation " + fmt(worst_fix) + " above " + fmt(form_tol));
  chk.require(worst_seed <= form_tol,
              "seed dependence " + fmt(worst_seed) + " above " + fmt(form_tol));

  // polydisc: diag(1/2, 1/2) within 1e-3
  Seminorm poly = Seminorm::max_abs(Mat::Identity(2, 2));
  MveeOptions mo;
  mo.tol = opts.tol;
  mo.seed = opts.seed;
  auto [Sp, certp] = mvee_seminorm(poly, mo);
  chk.require(certp.certified, "polydisc solve not certified");
  chk.require(certp.dual_gap <= 2.0 * opts.tol, "polydisc dual gap too large");
  double poly_dev = max_entry_diff(Sp.matrix(), 0.5 * Mat::Identity(2, 2));
  chk.require(poly_dev <= 1e-3, "polydisc deviation " + fmt(poly_dev) + " above 1e-3");
  MveeOptions mo2 = mo;
  mo2.seed = opts.seed + 977;
  auto [Sp2, certp2] = mvee_seminorm(poly, mo2);
  worst_seed = std::max(worst_seed, max_entry_diff(Sp.matrix(), Sp2.matrix()));
  chk.require(worst_seed <= form_tol, "polydisc seed dependence above " + fmt(form_tol));

  details = "fixed-point dev = " + fmt(worst_fix) + ", polydisc dev = " + fmt(poly_dev) +
            ", seed dev = " + fmt(worst_seed) + ", max gap = " + fmt(worst_gap) + " (tol " +
            fmt(form_tol) + " / 1e-3 / m tol)";
}

void criterion_sandwich(const VerifyOptions& opts, Check& chk, std::string& details) {
  const double slack = 5.0 * opts.tol;
  Rng rng(opts.seed ^ 0x5a4d);
  double worst_low = 0.0, worst_high = 0.0;
  for (int t = 0; t < 200; ++t) {
    Eigen::Index n = 1 + static_cast<Eigen::Index>(t % 3);
    Seminorm h = random_structured_seminorm(rng, n);
    WuOptions wo;
    wo.tol = opts.tol;
    wo.seed = opts.seed + static_cast<std::uint64_t>(t);
    WuResult res = wu_form(h, wo);
    double sqm = std::sqrt(static_cast<double>(res.m));
    for (int q = 0; q < 50; ++q) {
      Vec X = rng.unit_vector(n);
      double hv = h.eval(X);
      double wv = gram_eval(res.normalized_form, X);
      worst_low = std::max(worst_low, hv - wv);
      worst_high = std::max(worst_high, wv - sqm * hv);
    }
  }
  chk.require(worst_low <= slack, "lower sandwich violated by " + fmt(worst_low));
  chk.require(worst_high <= slack, "upper sandwich violated by " + fmt(worst_high));
  details = "200 seminorms x 50 vectors: max(h - Wh) = " + fmt(worst_low) +
            ", max(Wh - sqrt(m) h) = " + fmt(worst_high) + " (tol " + fmt(slack) + ")";
}

void criterion_product_formula(const VerifyOptions& opts, Check& chk, std::string& details) {
  const double form_tol = 10.0 * opts.tol;
  Rng rng(opts.seed ^ 0x9a0d);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    Eigen::Index n1 = 1 + static_cast<Eigen::Index>(t % 2);
    Eigen::Index n2 = 1 + static_cast<Eigen::Index>((t / 2) % 2);
    Mat S1 = random_pd_matrix(rng, n1);
    Mat S2 = random_pd_matrix(rng, n2);
    Seminorm h1 = Seminorm::hermitian_q(HermitianForm(S1));
    Seminorm h2 = Seminorm::hermitian_q(HermitianForm(S2));
    WuOptions wo;
    wo.tol = opts.tol;
    wo.seed = opts.seed + static_cast<std::uint64_t>(t);
    WuResult r1 = wu_form(h1, wo);
    WuResult r2 = wu_form(h2, wo);
    WuResult rp = wu_form(Seminorm::product_max(h1, h2), wo);
    Mat direct = Mat::Zero(n1 + n2, n1 + n2);
    direct.topLeftCorner(n1, n1) = r1.normalized_form.matrix();
    direct.bottomRightCorner(n2, n2) = r2.normalized_form.matrix();
    worst = std::max(worst, max_entry_diff(rp.normalized_form.matrix(), direct));
  }
  chk.require(worst <= form_tol, "product deviation " + fmt(worst) + " above " + fmt(form_tol));
  details = "20 pairs: max |shat(product) - shat(h1) (+) shat(h2)| = " + fmt(worst) +
            " (tol " + fmt(form_tol) + ")";
}

void criterion_ex1_scan(const VerifyOptions& opts, Check& chk, std::string& details) {
  WuOptions wo;
  wo.tol = opts.tol;
  wo.seed = opts.seed;
  MetricField field = ex1_field(0.5);
  Vec X(2);
  X << Complex(0, 0), Complex(1, 0);
  ScanReport rep = scan(field, field.default_sequence(40), field.default_limit(), X, wo);
  double expected_gap = std::sqrt(2.0) - 2.0 / std::sqrt(3.0);
  chk.require(rep.usc_violation, "usc violation not flagged");
  chk.require(!rep.lsc_violation, "lsc violation incorrectly flagged");
  chk.require(std::abs(rep.usc_gap - expected_gap) <= 1e-3,
              "gap " + fmt(rep.usc_gap) + " not within 1e-3 of " + fmt(expected_gap));
  details = "usc flagged, gap = " + fmt(rep.usc_gap) + " (expect " + fmt(expected_gap) +
            ", tol 1e-3)";
}

void criterion_ex3_scan(const VerifyOptions& opts, Check& chk, std::string& details) {
  WuOptions wo;
  wo.tol = opts.tol;
  wo.seed = opts.seed;
  MetricField field = ex3_field(0.3, 8.0);
  Vec X(2);
  X << Complex(0, 0), Complex(1, 0);
  ScanReport rep = scan(field, field.default_sequence(40), field.default_limit(), X, wo);
  chk.require(rep.lsc_violation, "lsc violation not flagged");
  double tail_max = 0.0;
  for (std::size_t k = rep.values.size() / 2; k < rep.values.size(); ++k)
    tail_max = std::max(tail_max, rep.values[k]);
  double bound = std::sqrt(2.0) / 8.0 + 1e-6;
  chk.require(tail_max <= bound, "tail value " + fmt(tail_max) + " above " + fmt(bound));
  chk.require(rep.limit_value >= 0.3 - 1e-6,
              "limit value " + fmt(rep.limit_value) + " below 0.3");
  details = "lsc flagged, tail max = " + fmt(tail_max) + " <= " + fmt(bound) +
            ", limit = " + fmt(rep.limit_value) + " >= 0.3";
}

void criterion_remark_contrast(const VerifyOptions& opts, Check& chk, std::string& details) {
  WuOptions wo;
  wo.tol = opts.tol;
  wo.seed = opts.seed;
  MetricField field = remark_field();
  Vec X(3);
  X << Complex(0, 0), Complex(0, 0), Complex(1, 0);

  std::vector<Vec> seq = field.default_sequence(40);
  double seq_sq = wu_field(field, seq.front(), X, wo, WuVariant::unnormalized);
  seq_sq *= seq_sq;
  double lim_sq = wu_field(field, field.default_limit(), X, wo, WuVariant::unnormalized);
  lim_sq *= lim_sq;
  chk.require(std::abs(seq_sq - 0.5) <= 1e-3,
              "sequence Wtilde^2 = " + fmt(seq_sq) + " not within 1e-3 of 1/2");
  chk.require(std::abs(lim_sq - 1.0 / 3.0) <= 1e-3,
              "limit Wtilde^2 = " + fmt(lim_sq) + " not within 1e-3 of 1/3");

  ScanReport unnorm = scan(field, seq, field.default_limit(), X, wo, WuVariant::unnormalized);
  chk.require(unnorm.usc_violation, "unnormalized scan did not flag usc violation");
  ScanReport norm = scan(field, seq, field.default_limit(), X, wo, WuVariant::normalized);
  chk.require(!norm.usc_violation && !norm.lsc_violation,
              "normalized scan flagged a violation");
  double worst_norm = std::abs(norm.limit_value - 1.0);
  for (double v : norm.values) worst_norm = std::max(worst_norm, std::abs(v - 1.0));
  chk.require(worst_norm <= 1e-3, "normalized values deviate from 1 by " + fmt(worst_norm));
  details = "Wtilde^2: sequence = " + fmt(seq_sq) + " (expect 1/2), limit = " + fmt(lim_sq) +
            " (expect 1/3), tol 1e-3; W stays at 1 within " + fmt(worst_norm);
}

void criterion_equivariance(const VerifyOptions& opts, Check& chk, std::string& details) {
  const double form_tol = 10.0 * opts.tol;
  Rng rng(opts.seed ^ 0xe901);
  double worst_pull = 0.0, worst_sym = 0.0;
  for (int t = 0; t < 20; ++t) {
    Eigen::Index n = 2 + static_cast<Eigen::Index>(t % 2);
    // moderately conditioned random invertible L
    Mat L = random_unitary(rng, n);
    RealVec diag(n);
    for (Eigen::Index i = 0; i < n; ++i) diag[i] = rng.uniform(0.6, 1.8);
    L = L * diag.asDiagonal().toDenseMatrix().cast<Complex>() * random_unitary(rng, n);

    Seminorm h = (t % 2 == 0)
                     ? Seminorm::hermitian_q(HermitianForm(random_pd_matrix(rng, n)))
                     : Seminorm::max_of([&] {
                         std::vector<Seminorm> parts;
                         parts.push_back(Seminorm::scaled_euclidean(1.0, n));
                         parts.push_back(
                             Seminorm::hermitian_q(HermitianForm(random_pd_matrix(rng, n, 0.2))));
                         return parts;
                       }());
    WuOptions wo;
    wo.tol = opts.tol;
    wo.seed = opts.seed + static_cast<std::uint64_t>(t);
    Mat S = wu_form(h, wo).core_form.matrix();
    Mat Spulled = wu_form(pullback(h, L), wo).core_form.matrix();
    worst_pull = std::max(worst_pull, max_entry_diff(Spulled, L.adjoint() * S * L));
  }
  chk.require(worst_pull <= form_tol,
              "pullback deviation " + fmt(worst_pull) + " above " + fmt(form_tol));

  for (int t = 0; t < 20; ++t) {
    Eigen::Index n = 2 + static_cast<Eigen::Index>(t % 2);
    int order = 2 + static_cast<int>(rng.raw() % 3);
    Mat V = random_unitary(rng, n);
    Vec phases(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double ang = 2.0 * M_PI * static_cast<double>(rng.raw() % order) / order;
      phases[i] = Complex(std::cos(ang), std::sin(ang));
    }
    Mat L = V * phases.asDiagonal() * V.adjoint();
    Mat S0 = random_pd_matrix(rng, n);
    std::vector<Seminorm> parts;
    Mat Lj = Mat::Identity(n, n);
    for (int j = 0; j < order; ++j) {
      parts.push_back(Seminorm::hermitian_q(HermitianForm(Lj.adjoint() * S0 * Lj)));
      Lj = Lj * L;
    }
    Seminorm h = Seminorm::max_of(std::move(parts));  // h o L = h by construction
    WuOptions wo;
    wo.tol = opts.tol;
    wo.seed = opts.seed + 31 + static_cast<std::uint64_t>(t);
    Mat S = wu_form(h, wo).core_form.matrix();
    worst_sym = std::max(worst_sym, max_entry_diff(L.adjoint() * S * L, S));
  }
  chk.require(worst_sym <= form_tol,
              "unitary symmetry deviation " + fmt(worst_sym) + " above " + fmt(form_tol));
  details = "pullback dev = " + fmt(worst_pull) + ", unitary-invariance dev = " +
            fmt(worst_sym) + " (tol " + fmt(form_tol) + ")";
}

void criterion_volume_continuity(const VerifyOptions& opts, Check& chk, std::string& details) {
  Rng rng(opts.seed ^ 0x701c);
  double worst_ratio_excess = 0.0;
  for (int t = 0; t < 20; ++t) {
    Eigen::Index n = 2 + static_cast<Eigen::Index>(t % 2);
    // base norm >= ||.|| with an exactly computable sphere supremum
    Mat S0 = random_pd_matrix(rng, n, 0.2);
    Eigen::SelfAdjointEigenSolver<Mat> es(S0, Eigen::EigenvaluesOnly);
    double H = std::max(1.0, std::sqrt(es.eigenvalues().maxCoeff()));
    std::vector<Seminorm> parts;
    parts.push_back(Seminorm::scaled_euclidean(1.0, n));
    parts.push_back(Seminorm::hermitian_q(HermitianForm(S0)));
    Seminorm h1 = Seminorm::max_of(std::move(parts));

    double phi = rng.uniform(0.02, 0.2);
    double phi_eff;
    Seminorm h2 = [&]() -> Seminorm {
      if (t % 2 == 0) {
        phi_eff = phi * H;  // |(1+phi) h - h| = phi h <= phi H ||.||
        return pullback(h1, (1.0 + phi) * Mat::Identity(n, n));
      }
      phi_eff = phi;  // h + phi ||.||: exactly phi ||.|| apart
      Seminorm base = h1;
      BlackBoxCheck check;
      check.skip = true;
      return Seminorm::black_box(
          [base, phi](const Vec& x) { return base.eval(x) + phi * x.norm(); },
          SubspaceBasis::zero(n), n, check);
    }();

    WuOptions wo;
    wo.tol = opts.tol;
    wo.seed = opts.seed + static_cast<std::uint64_t>(t);
    double vol1 = ellipsoid_volume(wu_form(h1, wo).core_form);
    double vol2 = ellipsoid_volume(wu_form(h2, wo).core_form);
    double envelope =
        std::pow(1.0 + phi_eff, 2.0 * static_cast<double>(n)) * (1.0 + 10.0 * opts.tol);
    worst_ratio_excess = std::max(worst_ratio_excess, vol1 / vol2 / envelope);
    worst_ratio_excess = std::max(worst_ratio_excess, vol2 / vol1 / envelope);
  }
  chk.require(worst_ratio_excess <= 1.0,
              "volume ratio exceeds the envelope by factor " + fmt(worst_ratio_excess));
  details = "20 perturbed pairs: max vol-ratio / envelope = " + fmt(worst_ratio_excess) +
            " (must be <= 1)";
}

void criterion_busemann(const VerifyOptions& opts, Check& chk, std::string& details) {
  Rng rng(opts.seed ^ 0xb05e);
  // (a) norm inputs are reproduced within 2e-2
  std::vector<Seminorm> norms;
  {
    std::vector<Seminorm> parts;
    parts.push_back(Seminorm::scaled_euclidean(1.0, 2));
    Mat cov = Mat::Zero(2, 1);
    cov(0, 0) = 2.0;  // eps = 1/2
    parts.push_back(Seminorm::max_abs(std::move(cov)));
    norms.push_back(Seminorm::max_of(std::move(parts)));
  }
  norms.push_back(Seminorm::scaled_euclidean(1.0, 2));
  double worst_norm_dev = 0.0;
  Seminorm pinched = norms[0];
  std::optional<Seminorm> pinched_hull;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    Seminorm out = busemann_seminorm(homogeneous_from_seminorm(norms[i]), 2000, opts.seed);
    if (i == 0) pinched_hull = out;
    for (int q = 0; q < 100; ++q) {
      Vec X = rng.unit_vector(2);
      worst_norm_dev = std::max(worst_norm_dev, std::abs(out.eval(X) - norms[i].eval(X)));
    }
  }
  chk.require(worst_norm_dev <= 2e-2,
              "norm reproduction deviates by " + fmt(worst_norm_dev));

  // (b) min of two slabs collapses to zero
  HomogeneousFunction slabs{
      [](const Vec& x) { return std::min(2.0 * std::abs(x[0]), 2.0 * std::abs(x[1])); }, 2};
  Seminorm collapsed = busemann_seminorm(slabs, 2000, opts.seed);
  double worst_slab = 0.0;
  for (int q = 0; q < 100; ++q)
    worst_slab = std::max(worst_slab, collapsed.eval(rng.unit_vector(2)));
  chk.require(worst_slab <= 2e-2, "slab gauge " + fmt(worst_slab) + " above 2e-2");

  // (c) domination and triangle inequality on 1000 random vectors
  double worst_dom = 0.0, worst_tri = 0.0;
  for (int q = 0; q < 1000; ++q) {
    Vec x = rng.unit_vector(2);
    double gx = pinched_hull->eval(x);
    worst_dom = std::max(worst_dom, gx - pinched.eval(x));
    if (q % 3 == 0) {
      Vec y = rng.unit_vector(2);
      double gy = pinched_hull->eval(y);
      double gxy = pinched_hull->eval(x + y);
      worst_tri = std::max(worst_tri, gxy - gx - gy);
    }
  }
  chk.require(worst_dom <= 2e-2, "domination violated by " + fmt(worst_dom));
  chk.require(worst_tri <= 1e-9 * 4.0 + 2e-2, "triangle violated by " + fmt(worst_tri));
  details = "norm reproduction dev = " + fmt(worst_norm_dev) + ", slab collapse max = " +
            fmt(worst_slab) + ", domination excess = " + fmt(worst_dom) +
            ", triangle excess = " + fmt(worst_tri) + " (tol 2e-2)";
}

}  // namespace

std::vector<CriterionResult> run_paper_verification(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "euclidean-fixed-point", opts, criterion_euclidean_fixed_point));
  out.push_back(run_one(2, "pinched-ball-pair", opts, criterion_example0));
  out.push_back(run_one(3, "mvee-correctness", opts, criterion_mvee_correctness));
  out.push_back(run_one(4, "sandwich-property", opts, criterion_sandwich));
  out.push_back(run_one(5, "product-formula", opts, criterion_product_formula));
  out.push_back(run_one(6, "usc-failure-scan", opts, criterion_ex1_scan));
  out.push_back(run_one(7, "lsc-failure-scan", opts, criterion_ex3_scan));
  out.push_back(run_one(8, "normalization-contrast", opts, criterion_remark_contrast));
  out.push_back(run_one(9, "equivariance-symmetry", opts, criterion_equivariance));
  out.push_back(run_one(10, "volume-continuity", opts, criterion_volume_continuity));
  out.push_back(run_one(11, "busemann-convexification", opts, criterion_busemann));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

void print_table(const std::vector<CriterionResult>& results, std::ostream& out) {
  int passed = 0;
  for (const CriterionResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.details
        << "\n";
    if (r.pass) ++passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace wu::verify
