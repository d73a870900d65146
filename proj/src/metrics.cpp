#include "imetric/metrics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace imetric {

namespace {

void require_inside(const Domain& dom, const Point& p, const char* fn) {
  if (!contains(dom, p)) {
    throw std::domain_error(std::string(fn) + ": point lies outside the domain");
  }
}

std::complex<double> to_complex(const Eigen::Vector2d& v) { return {v.x(), v.y()}; }

Eigen::Vector2d to_vector(const std::complex<double>& z) { return {z.real(), z.imag()}; }

void require_in_disk(const Eigen::Vector2d& v, const char* fn) {
  if (!(v.norm() < 1.0)) {
    throw std::domain_error(std::string(fn) + ": point lies outside the unit disk");
  }
}

}  // namespace

double j_metric(const Domain& dom, const Point& x, const Point& y) {
  require_inside(dom, x, "j_metric");
  require_inside(dom, y, "j_metric");
  const double d = std::min(boundary_distance(dom, x), boundary_distance(dom, y));
  return std::log1p((x - y).norm() / d);
}

double h_metric(const Domain& dom, double c, const Point& x, const Point& y) {
  if (!(c > 0.0)) throw std::invalid_argument("h_metric: c must be positive");
  require_inside(dom, x, "h_metric");
  require_inside(dom, y, "h_metric");
  const double d = std::sqrt(boundary_distance(dom, x) * boundary_distance(dom, y));
  return std::log1p(c * (x - y).norm() / d);
}

double hyperbolic_ball(const Point& x, const Point& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("hyperbolic_ball: dimension mismatch");
  const double nx = x.norm(), ny = y.norm();
  if (!(nx < 1.0) || !(ny < 1.0))
    throw std::domain_error("hyperbolic_ball: point lies outside the unit ball");
  // sinh^2(rho/2) = |x-y|^2 / ((1-|x|^2)(1-|y|^2)); asinh keeps full accuracy
  // both for nearby points and near the boundary.
  const double denom = std::sqrt((1.0 - nx * nx) * (1.0 - ny * ny));
  return 2.0 * std::asinh((x - y).norm() / denom);
}

double hyperbolic_halfspace(const Point& x, const Point& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("hyperbolic_halfspace: dimension mismatch");
  const double xn = x[x.size() - 1], yn = y[y.size() - 1];
  if (!(xn > 0.0) || !(yn > 0.0))
    throw std::domain_error("hyperbolic_halfspace: point lies outside the half-space");
  // cosh(rho) = 1 + |x-y|^2/(2 x_n y_n) rewritten through cosh(2u) = 1 + 2 sinh^2(u).
  return 2.0 * std::asinh((x - y).norm() / (2.0 * std::sqrt(xn * yn)));
}

double w_transform(double c, double t) {
  if (!(c > 0.0)) throw std::invalid_argument("w_transform: c must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("w_transform: t must be nonnegative");
  return std::log1p(2.0 * c * std::sinh(0.5 * t));
}

double base_distance(const MetricSpec& spec, const Point& x, const Point& y) {
  switch (spec.base) {
    case BaseMetric::DistanceRatio:
      return j_metric(spec.domain, x, y);
    case BaseMetric::HMetric:
      return h_metric(spec.domain, spec.c, x, y);
    case BaseMetric::Hyperbolic:
      switch (spec.domain.kind()) {
        case DomainKind::UnitBall: {
          require_inside(spec.domain, x, "base_distance");
          require_inside(spec.domain, y, "base_distance");
          return hyperbolic_ball(x, y);
        }
        case DomainKind::HalfSpace: {
          require_inside(spec.domain, x, "base_distance");
          require_inside(spec.domain, y, "base_distance");
          return hyperbolic_halfspace(x, y);
        }
        default:
          throw std::invalid_argument(
              "base_distance: the hyperbolic metric requires a ball or half-space");
      }
  }
  throw std::logic_error("base_distance: unknown base metric");
}

double w_metric(const MetricSpec& spec, const Point& x, const Point& y) {
  return w_transform(spec.c, base_distance(spec, x, y));
}

Eigen::Vector2d mobius_to_origin(const Eigen::Vector2d& a, const Eigen::Vector2d& z) {
  require_in_disk(a, "mobius_to_origin");
  require_in_disk(z, "mobius_to_origin");
  const auto ca = to_complex(a), cz = to_complex(z);
  return to_vector((cz - ca) / (1.0 - std::conj(ca) * cz));
}

Eigen::Vector2d mobius_from_origin(const Eigen::Vector2d& a, const Eigen::Vector2d& w) {
  require_in_disk(a, "mobius_from_origin");
  require_in_disk(w, "mobius_from_origin");
  const auto ca = to_complex(a), cw = to_complex(w);
  return to_vector((cw + ca) / (1.0 + std::conj(ca) * cw));
}

}  // namespace imetric
