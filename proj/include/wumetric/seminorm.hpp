#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "wumetric/hermitian.hpp"

namespace wu {

/// Admission parameters for black-box seminorms. Homogeneity and the
/// triangle inequality are checked on seeded random samples at construction;
/// tolerance is relative to the magnitudes involved.
struct BlackBoxCheck {
  int samples = 64;
  double tolerance = 1e-8;
  std::uint64_t seed = 0x73656d69;
  bool skip = false;  // for internal wraps of values already known to be seminorms
};

/// Structured description of a C-seminorm on C^n. Variants cover Hermitian
/// quadratic seminorms, max of |linear functional|, max combinations,
/// scaled Euclidean norms, product maxima and opaque evaluators with a
/// declared kernel.
class Seminorm {
 public:
  struct HermitianQ {
    HermitianForm form;  // acts on the full ambient space
  };
  struct MaxAbs {
    Mat covectors;  // n x k columns a_j; value is max_j |<X, a_j>|
  };
  struct Max {
    std::vector<Seminorm> parts;  // all on the same space
  };
  struct ScaledEuclidean {
    double scale;
    Eigen::Index dim;
  };
  struct Product {
    std::vector<Seminorm> factors;  // exactly two; value is max(h1(X1), h2(X2))
  };
  struct BlackBox {
    std::function<double(const Vec&)> evaluator;
    SubspaceBasis declared_kernel;
    Eigen::Index dim;
  };
  using Node = std::variant<HermitianQ, MaxAbs, Max, ScaledEuclidean, Product, BlackBox>;

  static Seminorm hermitian_q(HermitianForm form);
  static Seminorm max_abs(Mat covectors);
  static Seminorm max_of(std::vector<Seminorm> parts);
  static Seminorm scaled_euclidean(double scale, Eigen::Index dim);
  static Seminorm product_max(Seminorm h1, Seminorm h2);
  static Seminorm black_box(std::function<double(const Vec&)> evaluator,
                            SubspaceBasis declared_kernel, Eigen::Index dim,
                            const BlackBoxCheck& check = {});

  Eigen::Index dim() const { return dim_; }
  const Node& node() const { return node_; }

  /// Seminorm value at X.
  double eval(const Vec& X) const;

 private:
  Seminorm(Node node, Eigen::Index dim) : node_(std::move(node)), dim_(dim) {}
  Node node_;
  Eigen::Index dim_;
};

/// V(h) and U(h) = orthogonal complement of V(h). `positivity_floor` is the
/// smallest value of h seen on random unit vectors of U during validation
/// (0 when U is trivial).
struct KernelDecomposition {
  SubspaceBasis V;
  SubspaceBasis U;
  double positivity_floor = 0.0;
};

/// Kernel split. Structured variants are computed exactly from structure;
/// BlackBox uses the declared kernel and validates it probabilistically
/// (h <= 1e-9 on 100 random unit vectors of span V).
KernelDecomposition kernel_decomposition(const Seminorm& h);

/// Boundary points of the indicatrix restricted to U: the basis directions
/// of U first, then seeded rotation-invariant random directions, each mapped
/// to x = d / h(d). Every output satisfies |h(x) - 1| <= 1e-12. Requires
/// count >= 2 dim U and h positive on the sampled directions.
std::vector<Vec> boundary_sample(const Seminorm& h, const SubspaceBasis& U,
                                 int count, std::uint64_t seed);

/// h composed with a linear map A: C^n -> C^p (h on C^p); the result lives
/// on C^n. Products become max combinations of the composed factors.
Seminorm compose_linear(const Seminorm& h, const Mat& A);

}  // namespace wu
