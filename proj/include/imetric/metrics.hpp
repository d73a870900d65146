#pragma once

#include "imetric/domain.hpp"

namespace imetric {

/// Distance ratio metric j(x, y) = log(1 + |x-y| / min{d(x), d(y)}), where
/// d is the boundary distance of dom. Both points must lie inside dom.
double j_metric(const Domain& dom, const Point& x, const Point& y);

/// h(x, y) = log(1 + c |x-y| / sqrt(d(x) d(y))). A metric for every c >= 2;
/// the constant 2 is best possible (violations exist for small c).
double h_metric(const Domain& dom, double c, const Point& x, const Point& y);

/// Hyperbolic distance of the unit ball, via
/// sinh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2)), accurate for nearby points.
double hyperbolic_ball(const Point& x, const Point& y);

/// Hyperbolic distance of the upper half-space {x_n > 0}, via
/// rho = 2 asinh(|x-y| / (2 sqrt(x_n y_n))).
double hyperbolic_halfspace(const Point& x, const Point& y);

/// The transform t -> log(1 + 2c sinh(t/2)) that turns a base metric into
/// the W metric. Increasing in t and c; W_c = transform . base is a metric
/// for every c >= 1 and every base metric. Overflow-safe up to t = 700.
double w_transform(double c, double t);

enum class BaseMetric { DistanceRatio, Hyperbolic, HMetric };

/// Selects the base metric and the parameter c of the derived metric
/// W(x, y) = w_transform(c, base(x, y)). BaseMetric::Hyperbolic requires a
/// ball or half-space domain; HMetric reuses the same c inside the base.
struct MetricSpec {
  BaseMetric base = BaseMetric::DistanceRatio;
  double c = 1.0;
  Domain domain = Domain::unit_ball(2);
};

/// The base distance selected by spec (without the transform).
double base_distance(const MetricSpec& spec, const Point& x, const Point& y);

/// W(x, y) = w_transform(spec.c, base(x, y)).
double w_metric(const MetricSpec& spec, const Point& x, const Point& y);

/// The disk automorphism taking a to the origin, z -> (z-a)/(1 - conj(a) z),
/// in real coordinates. An isometry of the hyperbolic metric. Requires
/// |a| < 1 and |z| < 1.
Eigen::Vector2d mobius_to_origin(const Eigen::Vector2d& a, const Eigen::Vector2d& z);

/// Inverse of mobius_to_origin: w -> (w+a)/(1 + conj(a) w).
Eigen::Vector2d mobius_from_origin(const Eigen::Vector2d& a, const Eigen::Vector2d& w);

}  // namespace imetric
