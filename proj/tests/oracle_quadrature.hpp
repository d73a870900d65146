#pragma once

// Test-only oracle for the Grotzsch modulus machinery: evaluates the
// complete elliptic integral from its integral definition by composite
// Simpson quadrature and inverts mu by plain bisection. Deliberately slow
// and independent of the AGM path used by the library.

#include <cmath>
#include <numbers>

namespace oracle {

inline double elliptic_K_quadrature(double r) {
  const double k2 = r * r;
  const auto f = [k2](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - k2 * s * s);
  };
  const int n = 1 << 16;  // even
  const double a = 0.0, b = std::numbers::pi / 2.0;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

inline double mu_quadrature(double r) {
  const double rc = std::sqrt((1.0 - r) * (1.0 + r));
  return std::numbers::pi / 2.0 * elliptic_K_quadrature(rc) / elliptic_K_quadrature(r);
}

inline double mu_inv_quadrature(double m) {
  double lo = 1e-9, hi = 1.0 - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mu_quadrature(mid) > m ? lo : hi) = mid;  // mu is decreasing
  }
  return 0.5 * (lo + hi);
}

inline double phi_quadrature(double K, double r) {
  return mu_inv_quadrature(mu_quadrature(r) / K);
}

}  // namespace oracle
