#pragma once

namespace imetric {

/// Every numeric tolerance used by the library and the verification
/// checks, collected in one record so a CLI override reaches all of
/// them consistently.
struct Tolerances {
  /// Absolute slack for sampled non-strict inequality checks.
  double slack = 1e-12;
  /// Strict inequalities: when both sides agree to within this bound the
  /// node is a tie (warning), not a violation.
  double tie = 1e-13;
  /// Pinned equality cases (attainment points of sharp bounds).
  double equality = 1e-12;
  /// AGM iteration: stop when successive iterates differ by less.
  double agm = 1e-15;
  /// Target residual of the modulus inverse, relative to max(1, m).
  double mu_inverse = 1e-12;
  /// Agreement with a tail limit evaluated at finite argument.
  double limit = 1e-8;
  /// Branch-crossing identities.
  double crossing = 1e-14;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace imetric
