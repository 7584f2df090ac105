#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wumetric/fields.hpp"

namespace wu::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;  // measured vs expected values with tolerances
};

struct VerifyOptions {
  double tol = 1e-6;
  std::uint64_t seed = 42;
};

/// Runs the full verification suite: the closed-form fixed points, the
/// worked examples and counterexamples, the sandwich/product/equivariance
/// properties, the volume-continuity envelope, and the convexification
/// checks. Each criterion is evaluated at the tolerance stated in its
/// details string.
std::vector<CriterionResult> run_paper_verification(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// One pass/fail line per criterion plus a summary line.
void print_table(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace wu::verify
