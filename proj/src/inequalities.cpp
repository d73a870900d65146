#include "imetric/inequalities.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "imetric/sampling.hpp"

namespace imetric {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

Witness no_witness() { return {}; }

// Shared triple-based axiom check, parameterized over the distance.
template <typename Dist>
VerificationReport metric_axioms(std::string claim_id, const Domain& dom, int n_triples,
                                 std::uint64_t seed, const Tolerances& tol,
                                 Dist&& dist) {
  Rng rng(seed);
  ClaimChecker ck(std::move(claim_id), tol, seed);
  for (int i = 0; i < n_triples; ++i) {
    const Point x = sample_point(dom, rng);
    const Point y = sample_point(dom, rng);
    const Point z = sample_point(dom, rng);
    const double dxy = dist(x, y), dyz = dist(y, z), dxz = dist(x, z);
    auto wit = [&] { return Witness::of_points({x, y, z}); };
    ck.check_le(0.0, dxy, wit);
    ck.check_le(dxz, dxy + dyz, wit);
    ck.check_le(dxy, dxz + dyz, wit);
    ck.check_le(dyz, dxy + dxz, wit);
    if (i % 997 == 0) {
      // symmetry must hold to the bit, and the distance of a point to
      // itself must be exactly zero
      ck.check_that(dist(y, x) == dxy, std::abs(dist(y, x) - dxy), wit);
      ck.check_that(dist(x, x) == 0.0, std::abs(dist(x, x)), wit);
    }
  }
  return ck.report();
}

}  // namespace

TransformDiagnostics transform_diagnostics(double c, double t) {
  if (!(c > 0.0) || !(t > 0.0))
    throw std::invalid_argument("transform_diagnostics: c and t must be positive");
  const double w = 1.0 + 2.0 * c * std::sinh(0.5 * t);
  const double g = c * t * std::cosh(0.5 * t) / w - std::log(w);
  return {w, g};
}

double ratio_slope_limit(double c) { return -std::log(c); }

VerificationReport check_linear_envelope(const GridSpec& grid, const Tolerances& tol) {
  grid.validate();
  for (double c : grid.c_values)
    if (c < 0.5)
      throw std::invalid_argument("check_linear_envelope: requires c >= 1/2");
  ClaimChecker ck("prop-double-bound", tol);
  const auto ts = grid.t_nodes();
  for (double c : grid.c_values) {
    for (double t : ts) {
      const double F = w_transform(c, t);
      auto wit = [&] { return Witness::ct(c, t); };
      ck.check_lt(c / (2.0 * (1.0 + c)) * t, F, wit);
      ck.check_lt(F, c * t, wit);
    }
  }
  return ck.report();
}

std::optional<std::pair<double, double>> find_ratio_increase(double c, double t_lo,
                                                             double t_hi) {
  double t = t_lo;
  double prev = w_transform(c, t) / t;
  while (t < t_hi) {
    const double tn = std::min(t * 1.05, t_hi);
    const double cur = w_transform(c, tn) / tn;
    if (cur - prev > 1e-14) return std::make_pair(t, tn);
    t = tn;
    prev = cur;
    if (tn == t_hi) break;
  }
  return std::nullopt;
}

VerificationReport check_ratio_monotonicity(double c, const GridSpec& grid,
                                            const Tolerances& tol) {
  grid.validate();
  ClaimChecker ck("lemma-monotone/c=" + num(c), tol);
  const auto ts = grid.t_nodes();
  if (c >= 1.0) {
    double prev = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double t = ts[i];
      const double r = w_transform(c, t) / t;
      auto wit = [&] { return Witness::ct(c, t); };
      ck.check_lt(0.5, r, wit);
      ck.check_lt(r, c, wit);
      if (i > 0) ck.check_lt(r, prev, wit);
      prev = r;
    }
  } else {
    // the ratio must fail to be decreasing: an adjacent increase exists
    const auto inc = find_ratio_increase(c, grid.t_min, 700.0);
    if (inc) {
      const double gain = w_transform(c, inc->second) / inc->second -
                          w_transform(c, inc->first) / inc->first;
      ck.check_that(true, -gain, no_witness);
    } else {
      ck.check_that(false, 0.0, [&] { return Witness::ct(c, 700.0); });
    }
  }
  return ck.report();
}

VerificationReport check_ratio_slope_limit(double c, const Tolerances& tol) {
  if (!(c > 0.0))
    throw std::invalid_argument("check_ratio_slope_limit: c must be positive");
  ClaimChecker ck("limit-L/c=" + num(c), tol);
  const double limit = ratio_slope_limit(c);
  const double ts[] = {20.0, 30.0, 40.0, 50.0};
  double prev_err = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double err = std::abs(transform_diagnostics(c, ts[i]).ratio_slope - limit);
    auto wit = [&, i] { return Witness::ct(c, ts[i]); };
    if (i > 0) ck.check_le(err, prev_err, wit);
    prev_err = err;
  }
  ck.check_le(prev_err, tol.limit, [&] { return Witness::ct(c, 50.0); });
  return ck.report();
}

namespace {

// Gap between the exponential form of the rational upper bound and the
// transform argument: positive iff the bound holds at (c, t).
double exp_form_gap(double c, double t) {
  return std::expm1(0.5 * t + c * t / (t + 1.0)) - 2.0 * c * std::sinh(0.5 * t);
}

double exp_form_argmin(double t) {
  const double s = (t + 1.0) / t;
  return s * std::log(s * (-std::expm1(-t)));
}

}  // namespace

VerificationReport check_rational_upper_bound(const GridSpec& grid,
                                              const Tolerances& tol) {
  grid.validate();
  ClaimChecker ck("lemma-refined-upper", tol);
  const auto ts = grid.t_nodes();
  for (double c : grid.c_values) {
    for (double t : ts) {
      auto wit = [&] { return Witness::ct(c, t); };
      const double bound = 0.5 * (t * t + (2.0 * c + 1.0) * t) / (t + 1.0);
      ck.check_le(w_transform(c, t), bound, wit);
      ck.check_lt(0.0, exp_form_gap(c, t), wit);
    }
  }
  for (double t : ts) {
    const double c0 = exp_form_argmin(t);
    auto wit = [&] { return Witness::ct(c0, t); };
    ck.check_lt(0.0, c0, wit);
    ck.check_lt(0.0, exp_form_gap(c0, t), wit);
  }
  return ck.report();
}

VerificationReport check_appendix_chain(const Tolerances& tol) {
  ClaimChecker ck("appendix", tol);
  GridSpec grid{{1.0}, 1e-3, 50.0, 2000, GridSpec::Spacing::Log};
  for (double t : grid.t_nodes()) {
    auto wit = [&] { return Witness::ct(0.0, t); };
    const double one_minus_exp = -std::expm1(-t);
    ck.check_lt(t / (t + 1.0), one_minus_exp, wit);
    const double log_term = std::log((t + 1.0) / t * one_minus_exp);
    const double two_sinh = 2.0 * std::sinh(0.5 * t);
    const double C = (1.0 - log_term) * two_sinh - t / (t + 1.0);
    ck.check_lt(0.0, C, wit);
    const double C_reduced = 1.0 - log_term - std::exp(-0.5 * t);
    ck.check_lt(0.0, C_reduced, wit);
    const double C_core =
        2.0 * std::expm1(t) - 2.0 * t * (t + 1.0) + t * (t + 1.0) * two_sinh;
    ck.check_lt(0.0, C_core, wit);
  }
  return ck.report();
}

VerificationReport check_shifted_envelope(const GridSpec& grid, const Tolerances& tol) {
  grid.validate();
  ClaimChecker ck("lemma-shifted", tol);
  const auto ts = grid.t_nodes();
  for (double c : grid.c_values) {
    const double shift = std::log(c + 0.25 / c);
    for (double t : ts) {
      auto wit = [&] { return Witness::ct(c, t); };
      const double F = w_transform(c, t);
      if (c >= 1.0) ck.check_le(t / (t + 1.0) * std::log(c) + 0.5 * t, F, wit);
      ck.check_le(F, shift + 0.5 * t, wit);
    }
    if (c > 0.5) {
      // sharp point of the upper bound
      const double teq = 2.0 * std::log(2.0 * c);
      ck.check_eq(w_transform(c, teq), shift + std::log(2.0 * c), tol.equality,
                  [&] { return Witness::ct(c, teq); });
    }
  }
  return ck.report();
}

double envelope_lower(double c, double t) {
  return c >= 1.0 ? t / (t + 1.0) * std::log(c) + 0.5 * t : 0.5 * c * t;
}

double envelope_upper(double c, double t) {
  return std::min(std::log(c + 0.25 / c) + 0.5 * t,
                  std::log1p(c * t) + c * std::expm1(t));
}

VerificationReport check_piecewise_envelope(const GridSpec& grid, const Tolerances& tol) {
  grid.validate();
  ClaimChecker ck("lemma-sandwich", tol);
  const auto ts = grid.t_nodes();
  for (double c : grid.c_values) {
    const double teq = c > 0.5 ? 2.0 * std::log(2.0 * c) : -1.0;
    for (double t : ts) {
      auto wit = [&] { return Witness::ct(c, t); };
      const double F = w_transform(c, t);
      const double u = envelope_upper(c, t);
      ck.check_lt(envelope_lower(c, t), F, wit);
      if (teq > 0.0 && std::abs(t - teq) <= 1e-3) {
        ck.check_le(F, u, wit);  // attainment neighbourhood
      } else {
        ck.check_lt(F, u, wit);  // attained nowhere else
      }
    }
    if (teq > 0.0) {
      ck.check_eq(w_transform(c, teq), envelope_upper(c, teq), tol.equality,
                  [&] { return Witness::ct(c, teq); });
    }
  }
  return ck.report();
}

VerificationReport check_j_transform_sandwich(const Domain& dom, int n_pairs,
                                              std::uint64_t seed, const Tolerances& tol) {
  Rng rng(seed);
  ClaimChecker ck("thm1.2/" + dom.describe(), tol, seed);
  const double log54 = std::log(1.25);
  for (int i = 0; i < n_pairs; ++i) {
    const Point x = sample_point(dom, rng);
    const Point y = sample_point(dom, rng);
    const double j = j_metric(dom, x, y);
    const double F = w_transform(1.0, j);
    auto wit = [&] { return Witness::of_points({x, y}); };
    ck.check_le(0.5 * j, F, wit);
    ck.check_le(F, j, wit);
    ck.check_le(F, 0.5 * j + log54, wit);
  }
  // the two upper branches cross where t = t/2 + log(5/4)
  const double tcross = 2.0 * log54;
  ck.check_eq(tcross, 0.5 * tcross + log54, tol.crossing,
              [&] { return Witness::ct(1.0, tcross); });
  return ck.report();
}

VerificationReport check_j_comparison_factors(const Domain& dom, double c, int n_pairs,
                                              std::uint64_t seed, const Tolerances& tol) {
  if (!(c >= 1.0))
    throw std::invalid_argument("check_j_comparison_factors: requires c >= 1");
  Rng rng(seed);
  ClaimChecker ck("thm-LU/" + dom.describe() + "/c=" + num(c), tol, seed);
  for (int i = 0; i < n_pairs; ++i) {
    const Point x = sample_point(dom, rng);
    const Point y = sample_point(dom, rng);
    const double j = j_metric(dom, x, y);
    const double W = w_transform(c, j);
    const double L = 0.5 + std::log(c) / (1.0 + j);
    const double U = (j + 2.0 * c + 1.0) / (2.0 * (1.0 + j));
    auto wit = [&] { return Witness::of_points({x, y}); };
    ck.check_le(L * j, W, wit);
    ck.check_le(W, U * j, wit);
  }
  return ck.report();
}

VerificationReport check_w_metric_axioms(const Domain& dom, double c, int n_triples,
                                         std::uint64_t seed, const Tolerances& tol) {
  const MetricSpec spec{BaseMetric::DistanceRatio, c, dom};
  return metric_axioms("W-metric-axioms/" + dom.describe() + "/c=" + num(c), dom,
                       n_triples, seed, tol, [&](const Point& a, const Point& b) {
                         return w_metric(spec, a, b);
                       });
}

VerificationReport check_h_metric_axioms(const Domain& dom, double c, int n_triples,
                                         std::uint64_t seed, const Tolerances& tol) {
  return metric_axioms("h-metric-axioms/" + dom.describe() + "/c=" + num(c), dom,
                       n_triples, seed, tol, [&](const Point& a, const Point& b) {
                         return h_metric(dom, c, a, b);
                       });
}

VerificationReport check_h_sharpness(double c, int n_triples, std::uint64_t seed,
                                     const Tolerances& tol) {
  if (!(c > 0.0 && c < 2.0))
    throw std::invalid_argument("check_h_sharpness: needs 0 < c < 2");
  const Domain disk = Domain::unit_ball(2);
  Rng rng(seed);
  ClaimChecker ck("h-metric-axioms/sharpness/c=" + num(c), tol, seed);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<Point> best_triple;
  auto consider = [&](const Point& x, const Point& y, const Point& z) {
    const double margin =
        h_metric(disk, c, x, z) - h_metric(disk, c, x, y) - h_metric(disk, c, y, z);
    if (margin > best) {
      best = margin;
      best_triple = {x, y, z};
    }
  };
  // symmetric triples hugging the boundary violate first
  for (double s : {0.5, 0.8, 0.9, 0.95, 0.99}) {
    Point x(2), y(2), z(2);
    x << -s, 0.0;
    y << 0.0, 0.0;
    z << s, 0.0;
    consider(x, y, z);
  }
  for (int i = 0; i < n_triples && best <= 1e-9; ++i) {
    consider(sample_point(disk, rng), sample_point(disk, rng), sample_point(disk, rng));
  }
  ck.check_that(best > 1e-9, -best, [&] { return Witness::ct(c, 0.0); });
  return ck.report();
}

VerificationReport check_j_vs_hyperbolic(const Domain& dom, int n_pairs,
                                         std::uint64_t seed, const Tolerances& tol) {
  if (dom.kind() == DomainKind::Polygon)
    throw std::invalid_argument("check_j_vs_hyperbolic: needs a ball or half-space");
  Rng rng(seed);
  ClaimChecker ck("jrho/" + dom.describe(), tol, seed);
  for (int i = 0; i < n_pairs; ++i) {
    const Point x = sample_point(dom, rng);
    const Point y = sample_point(dom, rng);
    const double j = j_metric(dom, x, y);
    const double rho = dom.kind() == DomainKind::UnitBall ? hyperbolic_ball(x, y)
                                                          : hyperbolic_halfspace(x, y);
    auto wit = [&] { return Witness::of_points({x, y}); };
    ck.check_le(j, rho, wit);
    ck.check_le(rho, 2.0 * j, wit);
  }
  return ck.report();
}

VerificationReport check_mobius_invariance(double c, int n_samples, std::uint64_t seed,
                                           const Tolerances& tol) {
  const MetricSpec spec{BaseMetric::Hyperbolic, c, Domain::unit_ball(2)};
  Rng rng(seed);
  ClaimChecker ck("mobius/lambda=" + num(c), tol, seed);
  for (int i = 0; i < n_samples; ++i) {
    // radius 0.95 keeps 1 - |T_a(x)|^2 well clear of cancellation
    const Eigen::Vector2d a = sample_disk(rng, 0.95);
    const Eigen::Vector2d x = sample_disk(rng, 0.95);
    const Eigen::Vector2d y = sample_disk(rng, 0.95);
    const Eigen::Vector2d tx = mobius_to_origin(a, x);
    const Eigen::Vector2d ty = mobius_to_origin(a, y);
    ck.check_eq(w_metric(spec, tx, ty), w_metric(spec, x, y), tol.slack,
                [&] { return Witness::of_points({a, x, y}); });
  }
  return ck.report();
}

nlohmann::ordered_json TriangleViolation::to_json() const {
  nlohmann::ordered_json j;
  j["c"] = c;
  j["x"] = {x.x(), x.y()};
  j["y"] = {y.x(), y.y()};
  j["z"] = {z.x(), z.y()};
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["margin"] = margin;
  return j;
}

TriangleViolation find_triangle_violation(double c, double target_margin) {
  if (!(c > 0.0)) throw std::invalid_argument("find_triangle_violation: c must be positive");
  const Domain disk = Domain::unit_ball(2);
  const MetricSpec spec{BaseMetric::DistanceRatio, c, disk};

  auto triple_margin = [&](const Point& x, const Point& y, const Point& z) {
    return w_metric(spec, x, z) - w_metric(spec, x, y) - w_metric(spec, y, z);
  };
  auto make = [&](double a, double b) {
    Point x(2), y(2), z(2);
    x << -a, 0.0;
    y << a, 0.0;
    z << b, 0.0;
    return std::array<Point, 3>{x, y, z};
  };
  auto result = [&](const Point& x, const Point& y, const Point& z) {
    TriangleViolation v;
    v.c = c;
    v.x = x.head<2>();
    v.y = y.head<2>();
    v.z = z.head<2>();
    v.lhs = w_metric(spec, x, z);
    v.rhs = w_metric(spec, x, y) + w_metric(spec, y, z);
    v.margin = v.lhs - v.rhs;
    return v;
  };

  // Collinear construction: x = -a, y = a, z = b with a, b -> 1. The
  // boundary slice of the violation functional,
  //   sqrt(1-a) + 2ca/sqrt(1+a) - sqrt(1+a)  ->  sqrt(2)(c-1) < 0  (a -> 1),
  // tells where a violating z must appear.
  std::ostringstream trace;
  const double headroom = c < 1.0 ? 0.5 * std::sqrt(2.0) * (c - 1.0) : 0.0;
  for (int k = 1; k <= 48; ++k) {
    const double a = 1.0 - std::ldexp(1.0, -k);
    const double slice =
        std::sqrt(1.0 - a) + 2.0 * c * a / std::sqrt(1.0 + a) - std::sqrt(1.0 + a);
    trace << "a=" << a << " slice=" << slice << "\n";
    if (!(slice < headroom)) continue;
    for (int m = 1; m <= 60; ++m) {
      const double b = 1.0 - std::ldexp(1.0 - a, -m);
      if (!(b > a) || !(b < 1.0)) break;
      const auto pts = make(a, b);
      if (triple_margin(pts[0], pts[1], pts[2]) > target_margin) {
        return result(pts[0], pts[1], pts[2]);
      }
    }
  }

  // Fallback: random triples (guards the construction near degenerate c).
  Rng rng(0x1ab17);
  for (int i = 0; i < 200000; ++i) {
    const Point x = sample_point(disk, rng);
    const Point y = sample_point(disk, rng);
    const Point z = sample_point(disk, rng);
    if (triple_margin(x, y, z) > target_margin) return result(x, y, z);
  }

  throw SearchFailure("find_triangle_violation: no violating triple found for c = " +
                      num(c) + " (none exists when c >= 1); scan trace:\n" + trace.str());
}

void write_curve_csv(FigureKind kind, std::optional<double> c, std::ostream& out) {
  if (kind == FigureKind::PiecewiseEnvelope && !c)
    throw std::invalid_argument("write_curve_csv: the piecewise envelope needs c");
  const double cc = kind == FigureKind::TransformSandwich ? 1.0 : *c;
  const double log54 = std::log(1.25);
  out << "t,lower,F,upper_first,upper_second,upper\n";
  char buf[256];
  for (int i = 1; i <= 512; ++i) {
    const double t = 6.0 * i / 512.0;
    const double F = w_transform(cc, t);
    double lower, u1, u2;
    if (kind == FigureKind::TransformSandwich) {
      lower = 0.5 * t;
      u1 = t;
      u2 = 0.5 * t + log54;
    } else {
      lower = envelope_lower(cc, t);
      u1 = std::log(cc + 0.25 / cc) + 0.5 * t;
      u2 = std::log1p(cc * t) + cc * std::expm1(t);
    }
    const double u = std::min(u1, u2);
    if (!(lower <= F && F <= u + 1e-12)) {
      throw std::runtime_error("write_curve_csv: ordering violated at t = " + num(t));
    }
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", t, lower, F,
                  u1, u2, u);
    out << buf << "\n";
  }
}

}  // namespace imetric
