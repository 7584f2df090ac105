#include "wumetric/seminorm.hpp"

#include <cmath>

#include "wumetric/rng.hpp"

namespace wu {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_black_box(const std::function<double(const Vec&)>& f, Eigen::Index n,
                     const BlackBoxCheck& check) {
  Rng rng(check.seed);
  for (int i = 0; i < check.samples; ++i) {
    Vec x = rng.unit_vector(n);
    double hx = f(x);
    if (!std::isfinite(hx) || hx < 0.0)
      throw ValidationError("black_box: evaluator returned a negative or non-finite value");
    // absolute homogeneity under a random complex scalar
    Complex t = rng.uniform(0.1, 3.0) * rng.phase();
    double lhs = f(t * x);
    double rhs = std::abs(t) * hx;
    if (std::abs(lhs - rhs) > check.tolerance * (1.0 + rhs))
      throw ValidationError("black_box: evaluator is not absolutely homogeneous");
    // triangle inequality on a random pair
    Vec y = rng.unit_vector(n);
    double hy = f(y);
    double hxy = f(x + y);
    if (hxy > hx + hy + check.tolerance * (1.0 + hx + hy))
      throw ValidationError("black_box: evaluator violates the triangle inequality");
  }
}

SubspaceBasis kernel_of(const Seminorm& h);

// Orthoprojector onto U(part) = complement of the part's kernel.
Mat support_projector(const Seminorm& part) {
  SubspaceBasis V = kernel_of(part);
  Eigen::Index n = part.dim();
  if (V.dim() == 0) return Mat::Identity(n, n);
  return Mat::Identity(n, n) - V.vectors() * V.vectors().adjoint();
}

SubspaceBasis kernel_of(const Seminorm& h) {
  return std::visit(
      overloaded{
          [&](const Seminorm::HermitianQ& node) {
            return null_space(node.form.ambient_matrix());
          },
          [&](const Seminorm::MaxAbs& node) {
            Eigen::Index n = node.covectors.rows();
            Mat A = Mat::Zero(n, n);
            for (Eigen::Index j = 0; j < node.covectors.cols(); ++j)
              A += node.covectors.col(j) * node.covectors.col(j).adjoint();
            return null_space(A);
          },
          [&](const Seminorm::Max& node) {
            Eigen::Index n = h.dim();
            Mat A = Mat::Zero(n, n);
            for (const Seminorm& part : node.parts) A += support_projector(part);
            return null_space(A);
          },
          [&](const Seminorm::ScaledEuclidean&) { return SubspaceBasis::zero(h.dim()); },
          [&](const Seminorm::Product& node) {
            const Seminorm& h1 = node.factors[0];
            const Seminorm& h2 = node.factors[1];
            SubspaceBasis v1 = kernel_of(h1);
            SubspaceBasis v2 = kernel_of(h2);
            Eigen::Index n = h.dim();
            Mat vecs = Mat::Zero(n, v1.dim() + v2.dim());
            vecs.block(0, 0, h1.dim(), v1.dim()) = v1.vectors();
            vecs.block(h1.dim(), v1.dim(), h2.dim(), v2.dim()) = v2.vectors();
            return SubspaceBasis(std::move(vecs), n);
          },
          [&](const Seminorm::BlackBox& node) {
            const SubspaceBasis& V = node.declared_kernel;
            if (V.dim() > 0) {
              Rng rng(0x6b65726e);
              for (int i = 0; i < 100; ++i) {
                Vec x = V.vectors() * rng.unit_vector(V.dim());
                if (h.eval(x) > 1e-9)
                  throw ValidationError(
                      "kernel_decomposition: black-box seminorm is nonzero on its declared kernel");
              }
            }
            return V;
          },
      },
      h.node());
}

}  // namespace

Seminorm Seminorm::hermitian_q(HermitianForm form) {
  Eigen::Index n = form.ambient_dim();
  if (form.has_proper_carrier()) {
    // extend by zero to the full ambient space
    form = HermitianForm(form.ambient_matrix());
  }
  return Seminorm(HermitianQ{std::move(form)}, n);
}

Seminorm Seminorm::max_abs(Mat covectors) {
  if (covectors.rows() <= 0)
    throw DimensionError("max_abs: covectors must live in a positive dimension");
  Eigen::Index n = covectors.rows();
  return Seminorm(MaxAbs{std::move(covectors)}, n);
}

Seminorm Seminorm::max_of(std::vector<Seminorm> parts) {
  if (parts.empty()) throw ValidationError("max_of: at least one part required");
  Eigen::Index n = parts.front().dim();
  for (const Seminorm& p : parts)
    if (p.dim() != n) throw DimensionError("max_of: parts have mismatched dimensions");
  return Seminorm(Max{std::move(parts)}, n);
}

Seminorm Seminorm::scaled_euclidean(double scale, Eigen::Index dim) {
  if (!(scale > 0.0)) throw ValidationError("scaled_euclidean: scale must be positive");
  if (dim <= 0) throw DimensionError("scaled_euclidean: dim must be positive");
  return Seminorm(ScaledEuclidean{scale, dim}, dim);
}

Seminorm Seminorm::product_max(Seminorm h1, Seminorm h2) {
  Eigen::Index n = h1.dim() + h2.dim();
  std::vector<Seminorm> factors;
  factors.push_back(std::move(h1));
  factors.push_back(std::move(h2));
  return Seminorm(Product{std::move(factors)}, n);
}

Seminorm Seminorm::black_box(std::function<double(const Vec&)> evaluator,
                             SubspaceBasis declared_kernel, Eigen::Index dim,
                             const BlackBoxCheck& check) {
  if (dim <= 0) throw DimensionError("black_box: dim must be positive");
  if (declared_kernel.ambient_dim() != dim)
    throw DimensionError("black_box: declared kernel does not match dim");
  if (!evaluator) throw ValidationError("black_box: evaluator required");
  if (!check.skip) check_black_box(evaluator, dim, check);
  return Seminorm(BlackBox{std::move(evaluator), std::move(declared_kernel), dim}, dim);
}

double Seminorm::eval(const Vec& X) const {
  if (X.size() != dim_) throw DimensionError("Seminorm::eval: dimension mismatch");
  return std::visit(
      overloaded{
          [&](const HermitianQ& node) { return gram_eval(node.form, X); },
          [&](const MaxAbs& node) {
            double v = 0.0;
            for (Eigen::Index j = 0; j < node.covectors.cols(); ++j)
              v = std::max(v, std::abs(node.covectors.col(j).dot(X)));
            return v;
          },
          [&](const Max& node) {
            double v = 0.0;
            for (const Seminorm& part : node.parts) v = std::max(v, part.eval(X));
            return v;
          },
          [&](const ScaledEuclidean& node) { return node.scale * X.norm(); },
          [&](const Product& node) {
            Eigen::Index n1 = node.factors[0].dim();
            double v1 = node.factors[0].eval(X.head(n1));
            double v2 = node.factors[1].eval(X.tail(X.size() - n1));
            return std::max(v1, v2);
          },
          [&](const BlackBox& node) {
            double v = node.evaluator(X);
            if (!std::isfinite(v) || v < 0.0)
              throw InvariantError("Seminorm::eval: black-box returned a bad value");
            return v;
          },
      },
      node_);
}

KernelDecomposition kernel_decomposition(const Seminorm& h) {
  SubspaceBasis V = kernel_of(h);
  SubspaceBasis U = ortho_complement(V);
  double floor = 0.0;
  if (U.dim() > 0) {
    Rng rng(0x73757070);
    floor = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
      Vec x = U.vectors() * rng.unit_vector(U.dim());
      floor = std::min(floor, h.eval(x));
    }
    if (std::holds_alternative<Seminorm::BlackBox>(h.node()) && floor <= 1e-9)
      throw ValidationError(
          "kernel_decomposition: black-box seminorm vanishes on the declared support");
  }
  return KernelDecomposition{std::move(V), std::move(U), floor};
}

std::vector<Vec> boundary_sample(const Seminorm& h, const SubspaceBasis& U,
                                 int count, std::uint64_t seed) {
  Eigen::Index m = U.dim();
  if (m == 0) throw ValidationError("boundary_sample: support subspace is trivial");
  if (U.ambient_dim() != h.dim())
    throw DimensionError("boundary_sample: subspace does not match the seminorm");
  if (count < 2 * m) throw ValidationError("boundary_sample: count must be >= 2 dim U");
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec d = (i < m) ? Vec(U.vectors().col(i))
                    : Vec(U.vectors() * rng.unit_vector(m));
    double v = h.eval(d);
    if (v <= 1e-12)
      throw ValidationError("boundary_sample: seminorm vanishes on a direction of U");
    Vec x = d / v;
    double r = h.eval(x);
    if (std::abs(r - 1.0) > 1e-12) x /= r;
    out.push_back(std::move(x));
  }
  return out;
}

Seminorm compose_linear(const Seminorm& h, const Mat& A) {
  if (A.rows() != h.dim())
    throw DimensionError("compose_linear: map codomain does not match the seminorm");
  Eigen::Index n = A.cols();
  return std::visit(
      overloaded{
          [&](const Seminorm::HermitianQ& node) {
            return Seminorm::hermitian_q(
                HermitianForm(A.adjoint() * node.form.matrix() * A));
          },
          [&](const Seminorm::MaxAbs& node) {
            if (node.covectors.cols() == 0) return Seminorm::max_abs(Mat(n, 0));
            return Seminorm::max_abs(A.adjoint() * node.covectors);
          },
          [&](const Seminorm::Max& node) {
            std::vector<Seminorm> parts;
            parts.reserve(node.parts.size());
            for (const Seminorm& part : node.parts) parts.push_back(compose_linear(part, A));
            return Seminorm::max_of(std::move(parts));
          },
          [&](const Seminorm::ScaledEuclidean& node) {
            double c2 = node.scale * node.scale;
            return Seminorm::hermitian_q(HermitianForm(c2 * (A.adjoint() * A)));
          },
          [&](const Seminorm::Product& node) {
            Eigen::Index n1 = node.factors[0].dim();
            std::vector<Seminorm> parts;
            parts.push_back(compose_linear(node.factors[0], A.topRows(n1)));
            parts.push_back(compose_linear(node.factors[1], A.bottomRows(A.rows() - n1)));
            return Seminorm::max_of(std::move(parts));
          },
          [&](const Seminorm::BlackBox& node) {
            // kernel of h(A .) = preimage of the declared kernel
            Mat Q = Mat::Identity(h.dim(), h.dim()) -
                    node.declared_kernel.vectors() * node.declared_kernel.vectors().adjoint();
            Mat QA = Q * A;
            SubspaceBasis kernel = null_space(Mat(QA.adjoint() * QA));
            auto inner = node.evaluator;
            Mat Acopy = A;
            BlackBoxCheck check;
            check.skip = true;
            return Seminorm::black_box(
                [inner, Acopy](const Vec& x) { return inner(Acopy * x); },
                std::move(kernel), n, check);
          },
      },
      h.node());
}

}  // namespace wu
