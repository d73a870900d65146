#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "imetric/domain.hpp"
#include "imetric/tolerances.hpp"

namespace imetric {

/// Evaluation grid for the (c, t) parameter checks. t_min stays strictly
/// positive (several claims degenerate at t = 0) and t_max is capped at 700
/// to keep exp(t) finite.
struct GridSpec {
  std::vector<double> c_values;
  double t_min = 1e-6;
  double t_max = 100.0;
  int t_samples = 10000;
  enum class Spacing { Linear, Log } spacing = Spacing::Log;

  void validate() const;
  std::vector<double> t_nodes() const;
};

/// Location of a failed (or worst) check: named parameters such as c and t,
/// and/or the offending point tuple.
struct Witness {
  std::vector<std::pair<std::string, double>> params;
  std::vector<Point> points;

  static Witness ct(double c, double t) { return {{{"c", c}, {"t", t}}, {}}; }
  static Witness of_points(std::vector<Point> pts) { return {{}, std::move(pts)}; }
};

/// Outcome of one verified claim. max_violation is the largest signed
/// excess lhs - rhs (or |lhs - rhs| - tol for equality claims) seen across
/// all checked assertions: every value <= 0 means the claim held with at
/// least that margin. witness is present iff n_violations > 0.
struct VerificationReport {
  std::string claim_id;
  std::int64_t n_checked = 0;
  std::int64_t n_violations = 0;
  double max_violation = -std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;
  std::uint64_t rng_seed = 0;

  bool passed() const { return n_violations == 0; }
  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports);

/// Accumulates assertion outcomes into a VerificationReport. Strict checks
/// treat near-ties (both sides within tol.tie) as warnings rather than
/// violations, so claims whose two sides collapse to the same double in a
/// saturated tail do not produce false failures.
class ClaimChecker {
 public:
  ClaimChecker(std::string claim_id, const Tolerances& tol, std::uint64_t seed = 0)
      : tol_(tol) {
    rep_.claim_id = std::move(claim_id);
    rep_.rng_seed = seed;
  }

  /// lhs <= rhs within tol.slack.
  template <typename WitnessFn>
  void check_le(double lhs, double rhs, WitnessFn&& wit) {
    record(lhs - rhs, lhs - rhs > tol_.slack, std::forward<WitnessFn>(wit));
  }

  /// lhs < rhs strictly; a tie within tol.tie is a warning.
  template <typename WitnessFn>
  void check_lt(double lhs, double rhs, WitnessFn&& wit) {
    const double excess = lhs - rhs;
    if (excess >= 0.0 && excess <= tol_.tie) {
      ++n_warnings_;
      record(excess, false, std::forward<WitnessFn>(wit));
    } else {
      record(excess, excess > 0.0, std::forward<WitnessFn>(wit));
    }
  }

  /// |lhs - rhs| <= tol.
  template <typename WitnessFn>
  void check_eq(double lhs, double rhs, double tol, WitnessFn&& wit) {
    const double excess = std::abs(lhs - rhs) - tol;
    record(excess, excess > 0.0, std::forward<WitnessFn>(wit));
  }

  /// An arbitrary predicate; excess conveys by how much it failed.
  template <typename WitnessFn>
  void check_that(bool ok, double excess, WitnessFn&& wit) {
    record(excess, !ok, std::forward<WitnessFn>(wit));
  }

  std::int64_t warnings() const { return n_warnings_; }
  const VerificationReport& report() const { return rep_; }

 private:
  template <typename WitnessFn>
  void record(double excess, bool violated, WitnessFn&& wit) {
    ++rep_.n_checked;
    if (excess > rep_.max_violation) rep_.max_violation = excess;
    if (violated) {
      ++rep_.n_violations;
      if (!rep_.witness) rep_.witness = wit();
    }
  }

  VerificationReport rep_;
  const Tolerances& tol_;
  std::int64_t n_warnings_ = 0;
};

}  // namespace imetric
