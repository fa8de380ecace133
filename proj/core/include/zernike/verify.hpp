#pragma once

#include <string>
#include <vector>

#include "zernike/interbasis.hpp"

namespace zernike::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst deviation for float checks, failure count for exact ones
  double tolerance = 0.0;  // 0 for exact identities
};

/// Named invariant suites:
///   orthonormality   quadrature delta_ab within every system
///   unitarity        exact row norms/orthogonality + float cross checks + inverse expansion
///   routes           exact route agreement and quadrature agreement of all coefficients
///   parity           coefficient selection rules and pointwise reflection parities
///   expansions       pointwise interbasis expansions of all three pairs
///   eigenvalue       finite-difference residual of the Zernike equation + O(h^2) decay
///   appendixA        closed-form integral vs Gauss quadrature
///   appendixB        series transformation chain and canonicalization identities
///   hahn-orthogonality   discrete Hahn orthogonality and the dual-Hahn identification
///   racah-duality    Racah self-duality and weight/norm consistency
const std::vector<std::string>& suite_names();

/// Runs one suite up to n_max. A tolerance <= 0 selects each check's default.
std::vector<CheckResult> run_suite(const std::string& suite, int n_max,
                                   double tolerance = 0.0, int threads = 1);

} // namespace zernike::verify
