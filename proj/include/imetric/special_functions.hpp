#pragma once

#include "imetric/tolerances.hpp"

namespace imetric {

struct AgmResult {
  double mean = 0.0;   // common limit of the two sequences
  int iterations = 0;  // iterations until |a - b| fell below tolerance
};

/// Arithmetic-geometric mean of a, b > 0. Converges quadratically; the
/// iteration count is exposed so convergence itself can be tested.
AgmResult agm(double a, double b, const Tolerances& tol = default_tolerances());

/// Complete elliptic integral of the first kind with modulus r in (0,1),
/// K(r) = pi / (2 * AGM(1, sqrt(1 - r^2))).
/// Throws std::domain_error outside (0,1).
double elliptic_K(double r);

/// Modulus of the planar Grotzsch ring,
///   mu(r) = (pi/2) * K(sqrt(1-r^2)) / K(r),
/// a strictly decreasing homeomorphism of (0,1) onto (0,inf). Values grow
/// without bound (like log(4/r)) as r -> 0; no internal cap is applied.
/// Endpoints r = 0 and r = 1 are rejected rather than mapped to limits.
double grotzsch_mu(double r);

/// Inverse of grotzsch_mu: the unique r in (0,1) with mu(r) = m, located by
/// bisection on (1e-12, 1 - 1e-12) followed by secant refinement. Outside
/// the reach of that bracket the asymptotic inversion r = 4 exp(-m), and
/// the reciprocal identity mu(r) mu(sqrt(1-r^2)) = pi^2/4, take over.
/// Residual |mu(r) - m| <= tol.mu_inverse * max(1, m) wherever the slope of
/// mu leaves a representable r that close; in the steep region near r = 1
/// the nearest representable preimage is returned instead (one ulp in r).
/// Throws std::runtime_error on genuine non-convergence or when the
/// preimage rounds to 1 in double precision.
double grotzsch_mu_inv(double m, const Tolerances& tol = default_tolerances());

/// Distortion function phi_K(r) = mu^{-1}(mu(r) / K), K > 0, r in (0,1).
/// Increasing in r; >= r for K >= 1 and <= r for K <= 1.
double phi_K(double K, double r, const Tolerances& tol = default_tolerances());

struct CkBounds {
  double lower = 0.0;  // K
  double upper = 0.0;  // log(2 (1 + sqrt(1 - 1/e^2))) (K - 1) + K
};

/// Two-sided bracket for the quasiregular distortion constant c(K), K >= 1.
/// lower == upper == 1 exactly at K = 1.
CkBounds cK_bounds(double K);

/// The upper end of the bracket; the operative constant in the distortion
/// checks (using the upper bound keeps every checked inequality valid).
double cK_upper(double K);

}  // namespace imetric
