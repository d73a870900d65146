#pragma once

#include <iosfwd>
#include <optional>

#include "imetric/metrics.hpp"
#include "imetric/report.hpp"

namespace imetric {

/// Diagnostics of the map t -> w_transform(c, t) used by the monotonicity
/// checks: `log_argument` is the expression inside the log,
/// w(t) = 1 + 2c sinh(t/2), and `ratio_slope` is
/// g(t) = c t cosh(t/2)/w(t) - log(w(t)), which carries the sign of
/// d/dt [w_transform(c, t)/t] (the derivative equals g(t)/t^2).
struct TransformDiagnostics {
  double log_argument = 0.0;
  double ratio_slope = 0.0;
};
TransformDiagnostics transform_diagnostics(double c, double t);

/// Tail limit of the ratio slope g(t): log 2 - log(2c) = -log(c).
/// Nonpositive exactly when c >= 1, which decides the monotonicity dichotomy.
double ratio_slope_limit(double c);

/// c t / (2(1+c)) < w_transform(c, t) < c t, for every c >= 1/2 in the grid.
VerificationReport check_linear_envelope(const GridSpec& grid,
                                         const Tolerances& tol = default_tolerances());

/// For c >= 1: w_transform(c, t)/t strictly decreasing across the grid with
/// values inside (1/2, c). For c < 1: an adjacent increasing pair must exist
/// (searched past the grid end up to t = 700 if needed).
VerificationReport check_ratio_monotonicity(double c, const GridSpec& grid,
                                            const Tolerances& tol = default_tolerances());

/// First adjacent increasing pair of t -> w_transform(c, t)/t in [t_lo, t_hi],
/// scanned geometrically; nullopt when the ratio never increases there.
std::optional<std::pair<double, double>> find_ratio_increase(double c, double t_lo,
                                                             double t_hi);

/// g(t) at t in {20, 30, 40, 50} approaches ratio_slope_limit(c)
/// monotonically, with |g(50) - limit| <= tol.limit.
VerificationReport check_ratio_slope_limit(double c,
                                           const Tolerances& tol = default_tolerances());

/// w_transform(c, t) <= (t^2 + (2c+1) t) / (2(t+1)) on the grid, plus the
/// positivity of the exponential-form gap E_t(c) at every node and at its
/// interior minimum c0(t).
VerificationReport check_rational_upper_bound(const GridSpec& grid,
                                              const Tolerances& tol = default_tolerances());

/// The positivity chain behind the rational upper bound, on t in
/// [1e-3, 50]: C(t) > 0, its reduced forms, and 1 - e^{-t} > t/(t+1).
VerificationReport check_appendix_chain(const Tolerances& tol = default_tolerances());

/// t log(c)/(t+1) + t/2 <= w_transform(c, t) for c >= 1, and
/// w_transform(c, t) <= log(c + 1/(4c)) + t/2 for c > 0, with equality in
/// the latter exactly at t = 2 log(2c) when c > 1/2 (checked explicitly).
VerificationReport check_shifted_envelope(const GridSpec& grid,
                                          const Tolerances& tol = default_tolerances());

/// Piecewise envelope: lower(c,t) < w_transform(c, t) <= upper(c,t) with
///   lower = t log(c)/(t+1) + t/2 (c >= 1) or c t/2 (c <= 1),
///   upper = min{ log(c + 1/(4c)) + t/2, log(1 + c t) + c(e^t - 1) },
/// attained only at t = 2 log(2c) for c > 1/2.
VerificationReport check_piecewise_envelope(const GridSpec& grid,
                                            const Tolerances& tol = default_tolerances());
double envelope_lower(double c, double t);
double envelope_upper(double c, double t);

/// j/2 <= w_transform(1, j) <= min{j, j/2 + log(5/4)} over random pairs of
/// dom, plus the crossing of the two upper branches at t = 2 log(5/4).
VerificationReport check_j_transform_sandwich(const Domain& dom, int n_pairs,
                                              std::uint64_t seed,
                                              const Tolerances& tol = default_tolerances());

/// L j <= W <= U j over random pairs, where W = w_transform(c, j),
/// L = 1/2 + log(c)/(1+j) and U = (j + 2c + 1)/(2(1+j)); requires c >= 1.
VerificationReport check_j_comparison_factors(const Domain& dom, double c, int n_pairs,
                                              std::uint64_t seed,
                                              const Tolerances& tol = default_tolerances());

/// Metric axioms of W = w_transform(c, j) over random triples of dom:
/// exact symmetry, nonnegativity, and all three triangle inequalities.
VerificationReport check_w_metric_axioms(const Domain& dom, double c, int n_triples,
                                         std::uint64_t seed,
                                         const Tolerances& tol = default_tolerances());

/// Metric axioms of h_metric over random triples of dom.
VerificationReport check_h_metric_axioms(const Domain& dom, double c, int n_triples,
                                         std::uint64_t seed,
                                         const Tolerances& tol = default_tolerances());

/// The claim that h with small c is NOT a metric: passes when a violating
/// triple is found (deterministic seed family plus random search).
VerificationReport check_h_sharpness(double c, int n_triples, std::uint64_t seed,
                                     const Tolerances& tol = default_tolerances());

/// j <= rho <= 2j over random pairs; dom must be a ball or half-space.
VerificationReport check_j_vs_hyperbolic(const Domain& dom, int n_pairs,
                                         std::uint64_t seed,
                                         const Tolerances& tol = default_tolerances());

/// |W_c(T_a x, T_a y) - W_c(x, y)| <= tol.slack for random disk
/// automorphisms T_a, with W_c built over the hyperbolic metric of the disk.
VerificationReport check_mobius_invariance(double c, int n_samples, std::uint64_t seed,
                                           const Tolerances& tol = default_tolerances());

/// A triple in the unit disk violating the triangle inequality of
/// W = w_transform(c, j) for c < 1: W(x,z) > W(x,y) + W(y,z) by `margin`.
struct TriangleViolation {
  double c = 0.0;
  Eigen::Vector2d x, y, z;
  double lhs = 0.0;    // W(x, z)
  double rhs = 0.0;    // W(x, y) + W(y, z)
  double margin = 0.0; // lhs - rhs > 0
  nlohmann::ordered_json to_json() const;
};

/// Raised when no violating triple exists (c >= 1) or the scan degenerates;
/// carries the scan trace.
struct SearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Constructs a violating triple for c < 1 by the collinear boundary scan
/// x = (-a, 0), y = (a, 0), z = (b, 0) with a, b -> 1, falling back to a
/// random search; throws SearchFailure when none exists.
TriangleViolation find_triangle_violation(double c, double target_margin = 1e-6);

enum class FigureKind { TransformSandwich, PiecewiseEnvelope };

/// Writes CSV curve data, 512 samples over t in (0, 6]: the transform with
/// its lower and (two-branch) upper envelopes. TransformSandwich fixes
/// c = 1 with upper branches {t, t/2 + log(5/4)}; PiecewiseEnvelope needs c.
/// Row ordering lower <= F <= upper is enforced while writing.
void write_curve_csv(FigureKind kind, std::optional<double> c, std::ostream& out);

}  // namespace imetric
