#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace wu {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// Bad input data: non-orthonormal bases, non-spanning point sets,
/// out-of-range parameters, failed probabilistic admission checks.
struct ValidationError : Error {
  using Error::Error;
};

/// A stated invariant was breached at runtime (e.g. a form that should be
/// PSD produced a significantly negative quadratic value).
struct InvariantError : Error {
  using Error::Error;
};

/// A solver exhausted its budget before reaching the requested tolerance.
struct CertificationError : Error {
  using Error::Error;
};

inline constexpr double kHermitianSymTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kCarrierTol = 1e-8;

}  // namespace wu
