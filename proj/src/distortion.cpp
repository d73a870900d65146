#include "imetric/distortion.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "imetric/metrics.hpp"
#include "imetric/sampling.hpp"
#include "imetric/special_functions.hpp"

namespace imetric {

TestMap TestMap::radial_stretch(double K) {
  if (!(K >= 1.0)) throw std::invalid_argument("radial_stretch: K must be >= 1");
  TestMap f;
  f.kind_ = Kind::RadialStretch;
  f.stretch_K_ = K;
  f.dilatation_ = K;
  f.name_ = "stretch(K=" + std::to_string(K) + ")";
  return f;
}

TestMap TestMap::power(int m) {
  if (m < 1) throw std::invalid_argument("power: exponent must be >= 1");
  TestMap f;
  f.kind_ = Kind::Power;
  f.power_m_ = m;
  f.dilatation_ = 1.0;
  f.name_ = "power(m=" + std::to_string(m) + ")";
  return f;
}

TestMap TestMap::mobius_conjugate(TestMap inner, const Eigen::Vector2d& a) {
  if (!(a.norm() < 1.0))
    throw std::invalid_argument("mobius_conjugate: center must lie in the disk");
  TestMap f;
  f.kind_ = Kind::MobiusConjugated;
  f.dilatation_ = inner.dilatation_;
  f.name_ = "conjugated " + inner.name_;
  f.inner_ = std::make_shared<TestMap>(std::move(inner));
  f.center_ = a;
  return f;
}

Eigen::Vector2d TestMap::operator()(const Eigen::Vector2d& z) const {
  if (!(z.norm() < 1.0))
    throw std::domain_error("TestMap: point lies outside the unit disk");
  switch (kind_) {
    case Kind::RadialStretch: {
      const double r = z.norm();
      if (r == 0.0) return z;
      return std::pow(r, 1.0 / stretch_K_ - 1.0) * z;
    }
    case Kind::Power: {
      std::complex<double> w(1.0, 0.0);
      const std::complex<double> cz(z.x(), z.y());
      for (int i = 0; i < power_m_; ++i) w *= cz;
      return {w.real(), w.imag()};
    }
    case Kind::MobiusConjugated:
      return mobius_from_origin(center_, (*inner_)(mobius_to_origin(center_, z)));
  }
  throw std::logic_error("TestMap: unknown kind");
}

namespace {

// Accumulates lhs <= rhs with the ratio excess the distortion reports carry.
template <typename Pair>
VerificationReport ratio_check(std::string claim_id, int n_pairs, std::uint64_t seed,
                               const Tolerances& tol, Pair&& lhs_rhs) {
  Rng rng(seed);
  ClaimChecker ck(std::move(claim_id), tol, seed);
  for (int i = 0; i < n_pairs; ++i) {
    const Eigen::Vector2d x = sample_disk_near_boundary(rng);
    const Eigen::Vector2d y = sample_disk_near_boundary(rng);
    const auto [lhs, rhs] = lhs_rhs(x, y);
    if (rhs == 0.0) {
      // coincident pair: both sides vanish
      ck.check_le(lhs, 0.0, [&] { return Witness::of_points({x, y}); });
      continue;
    }
    ck.check_that(lhs <= rhs * (1.0 + tol.slack), lhs / rhs - 1.0,
                  [&] { return Witness::of_points({x, y}); });
  }
  return ck.report();
}

double rho_disk(const Eigen::Vector2d& x, const Eigen::Vector2d& y) {
  return hyperbolic_ball(x, y);
}

}  // namespace

VerificationReport check_hyperbolic_distortion(const TestMap& f, int n_pairs,
                                               std::uint64_t seed,
                                               const Tolerances& tol) {
  const double K = f.dilatation();
  const double cK = cK_upper(K);
  return ratio_check("schwarz/" + f.describe(), n_pairs, seed, tol,
                     [&](const Eigen::Vector2d& x, const Eigen::Vector2d& y) {
                       const double rho = rho_disk(x, y);
                       const double lhs = rho_disk(f(x), f(y));
                       const double rhs =
                           cK * std::max(rho, std::pow(rho, 1.0 / K));
                       return std::pair{lhs, rhs};
                     });
}

VerificationReport check_w_distortion(const TestMap& f, double lambda, int n_pairs,
                                      std::uint64_t seed, const Tolerances& tol) {
  if (!(lambda >= 1.0))
    throw std::invalid_argument("check_w_distortion: lambda must be >= 1");
  const double K = f.dilatation();
  const double cK = cK_upper(K);
  return ratio_check("distow/" + f.describe() + "/lambda=" + std::to_string(lambda),
                     n_pairs, seed, tol,
                     [&](const Eigen::Vector2d& x, const Eigen::Vector2d& y) {
                       const double W = w_transform(lambda, rho_disk(x, y));
                       const double lhs = w_transform(lambda, rho_disk(f(x), f(y)));
                       const double rhs =
                           2.0 * lambda * cK * std::max(W, std::pow(W, 1.0 / K));
                       return std::pair{lhs, rhs};
                     });
}

VerificationReport check_w_distortion_chain(const TestMap& f, double lambda, int n_pairs,
                                            std::uint64_t seed, const Tolerances& tol) {
  if (!(lambda >= 1.0))
    throw std::invalid_argument("check_w_distortion_chain: lambda must be >= 1");
  Rng rng(seed);
  ClaimChecker ck("distow-chain/" + f.describe() + "/lambda=" + std::to_string(lambda),
                  tol, seed);
  for (int i = 0; i < n_pairs; ++i) {
    const Eigen::Vector2d x = sample_disk_near_boundary(rng);
    const Eigen::Vector2d y = sample_disk_near_boundary(rng);
    for (const double t : {rho_disk(x, y), rho_disk(f(x), f(y))}) {
      if (t <= 0.0) continue;
      const double W = w_transform(lambda, t);
      auto wit = [&] { return Witness::of_points({x, y}); };
      ck.check_lt(0.5 * t, W, wit);
      ck.check_lt(W, lambda * t, wit);
    }
  }
  return ck.report();
}

}  // namespace imetric
