#include "imetric/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace imetric {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMuBracketLo = 1e-12;
constexpr double kMuBracketHi = 1.0 - 1e-12;

void require_unit_interval(double r, const char* fn) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error(std::string(fn) + ": argument " + std::to_string(r) +
                            " outside (0,1)");
  }
}

// sqrt(1 - r^2) without cancellation near r = 1.
double complementary(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

}  // namespace

AgmResult agm(double a, double b, const Tolerances& tol) {
  if (!(a > 0.0 && b > 0.0)) throw std::domain_error("agm: arguments must be positive");
  AgmResult out;
  for (int i = 0; i < 40; ++i) {
    const double am = 0.5 * (a + b);
    const double gm = std::sqrt(a * b);
    a = am;
    b = gm;
    out.iterations = i + 1;
    if (std::abs(a - b) <= tol.agm) break;
  }
  out.mean = 0.5 * (a + b);
  return out;
}

double elliptic_K(double r) {
  require_unit_interval(r, "elliptic_K");
  return kPi / (2.0 * agm(1.0, complementary(r)).mean);
}

double grotzsch_mu(double r) {
  require_unit_interval(r, "grotzsch_mu");
  // mu(r) = (pi/2) K(r') / K(r) = (pi/2) AGM(1, r') / AGM(1, r).
  return kPi / 2.0 * agm(1.0, complementary(r)).mean / agm(1.0, r).mean;
}

double grotzsch_mu_inv(double m, const Tolerances& tol) {
  if (!(m > 0.0)) throw std::domain_error("grotzsch_mu_inv: argument must be positive");

  const double target = tol.mu_inverse * std::max(1.0, m);

  // Beyond the bracket top the asymptotic mu(r) ~ log(4/r) is already
  // accurate to O(r^2), far below double precision.
  if (m >= grotzsch_mu(kMuBracketLo)) {
    double r = 4.0 * std::exp(-m);
    if (!(r > 0.0)) {
      throw std::runtime_error("grotzsch_mu_inv: preimage underflows for m = " +
                               std::to_string(m));
    }
    return r;
  }
  // Below the bracket bottom, flip through mu(r) mu(r') = pi^2/4.
  if (m <= grotzsch_mu(kMuBracketHi)) {
    const double s = grotzsch_mu_inv(kPi * kPi / (4.0 * m), tol);
    const double r = complementary(s);
    if (!(r < 1.0)) {
      throw std::runtime_error("grotzsch_mu_inv: preimage for m = " + std::to_string(m) +
                               " rounds to 1 in double precision");
    }
    return r;
  }

  double lo = kMuBracketLo, hi = kMuBracketHi;
  double best = 0.5, best_resid = std::abs(grotzsch_mu(best) - m);
  // Near r = 1 the slope of mu makes the residual target unreachable for
  // any representable r; an exhausted bracket then yields the nearest
  // representable preimage (one ulp in r).
  bool exhausted = false;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      exhausted = true;
      break;
    }
    const double resid = grotzsch_mu(mid) - m;
    if (std::abs(resid) < best_resid) {
      best = mid;
      best_resid = std::abs(resid);
    }
    if (best_resid <= 0.0) break;
    (resid > 0.0 ? lo : hi) = mid;  // mu is decreasing
  }

  // Secant polish from the bracket endpoints.
  double r0 = lo, r1 = hi;
  double f0 = grotzsch_mu(r0) - m, f1 = grotzsch_mu(r1) - m;
  for (int i = 0; i < 8 && f1 != f0; ++i) {
    const double r2 = r1 - f1 * (r1 - r0) / (f1 - f0);
    if (!(r2 > 0.0 && r2 < 1.0)) break;
    const double f2 = grotzsch_mu(r2) - m;
    if (std::abs(f2) < best_resid) {
      best = r2;
      best_resid = std::abs(f2);
    }
    r0 = r1;
    f0 = f1;
    r1 = r2;
    f1 = f2;
    if (best_resid == 0.0) break;
  }

  if (best_resid > target && !exhausted) {
    throw std::runtime_error("grotzsch_mu_inv: residual " + std::to_string(best_resid) +
                             " above tolerance for m = " + std::to_string(m));
  }
  return best;
}

double phi_K(double K, double r, const Tolerances& tol) {
  if (!(K > 0.0)) throw std::domain_error("phi_K: K must be positive");
  require_unit_interval(r, "phi_K");
  return grotzsch_mu_inv(grotzsch_mu(r) / K, tol);
}

CkBounds cK_bounds(double K) {
  if (!(K >= 1.0)) throw std::domain_error("cK_bounds: K must be >= 1");
  const double factor = std::log(2.0 * (1.0 + std::sqrt(1.0 - std::exp(-2.0))));
  return {K, factor * (K - 1.0) + K};
}

double cK_upper(double K) { return cK_bounds(K).upper; }

}  // namespace imetric
