#pragma once

#include <memory>
#include <string>

#include "imetric/report.hpp"

namespace imetric {

/// Self-maps of the unit disk with analytically known maximal dilatation,
/// the test subjects of the distortion checks:
///   radial_stretch(K): z -> |z|^{1/K - 1} z, K-quasiconformal;
///   power(m):          z -> z^m, analytic (dilatation 1), non-injective
///                      for m >= 2;
///   mobius-conjugated maps keep the dilatation of the inner map.
class TestMap {
 public:
  static TestMap radial_stretch(double K);
  static TestMap power(int m);
  static TestMap mobius_conjugate(TestMap inner, const Eigen::Vector2d& a);

  /// Image of z, |z| < 1; stays in the closed disk, and in the open disk
  /// for these map families. Throws std::domain_error outside the disk.
  Eigen::Vector2d operator()(const Eigen::Vector2d& z) const;

  double dilatation() const { return dilatation_; }
  const std::string& describe() const { return name_; }

 private:
  TestMap() = default;
  enum class Kind { RadialStretch, Power, MobiusConjugated };
  Kind kind_ = Kind::Power;
  double stretch_K_ = 1.0;
  int power_m_ = 1;
  std::shared_ptr<const TestMap> inner_;
  Eigen::Vector2d center_{0.0, 0.0};
  double dilatation_ = 1.0;
  std::string name_;
};

/// rho(f(x), f(y)) <= cK * max{rho(x,y), rho(x,y)^{1/K}} over random pairs
/// of the disk, with cK the upper end of the c(K) bracket and rho the
/// hyperbolic metric. max_violation reports max(lhs/rhs) - 1.
VerificationReport check_hyperbolic_distortion(const TestMap& f, int n_pairs,
                                               std::uint64_t seed,
                                               const Tolerances& tol = default_tolerances());

/// W(f(x), f(y)) <= 2 lambda cK max{W^{1/K}, W} with W = w_transform(lambda,
/// rho), lambda >= 1. max_violation reports max(lhs/rhs) - 1.
VerificationReport check_w_distortion(const TestMap& f, double lambda, int n_pairs,
                                      std::uint64_t seed,
                                      const Tolerances& tol = default_tolerances());

/// The envelope t/2 < w_transform(lambda, t) < lambda t on the hyperbolic
/// distances actually sampled for f; the step that transfers the hyperbolic
/// distortion bound to W.
VerificationReport check_w_distortion_chain(const TestMap& f, double lambda, int n_pairs,
                                            std::uint64_t seed,
                                            const Tolerances& tol = default_tolerances());

}  // namespace imetric
