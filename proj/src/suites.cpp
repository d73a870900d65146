#include "imetric/suites.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "imetric/distortion.hpp"
#include "imetric/special_functions.hpp"

namespace imetric {

namespace {

std::vector<Domain> suite_domains(const SuiteOptions& opt) {
  if (opt.domain) return {*opt.domain};
  return {Domain::unit_ball(2), Domain::half_space(2),
          Domain::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}})};
}

GridSpec default_grid(std::vector<double> cs) {
  GridSpec g;
  g.c_values = std::move(cs);
  return g;
}

using Runner = std::vector<VerificationReport> (*)(const SuiteOptions&);

std::vector<VerificationReport> suite_double_bound(const SuiteOptions& opt) {
  return {check_linear_envelope(default_grid({0.5, 1.0, 2.0, 10.0}), opt.tol)};
}

std::vector<VerificationReport> suite_monotone(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (double c : {1.0, 2.0, 10.0})
    out.push_back(check_ratio_monotonicity(c, default_grid({c}), opt.tol));
  for (double c : {0.5, 0.9})
    out.push_back(check_ratio_monotonicity(c, default_grid({c}), opt.tol));
  return out;
}

std::vector<VerificationReport> suite_limit(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (double c : {0.5, 1.0, 2.0}) out.push_back(check_ratio_slope_limit(c, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_refined_upper(const SuiteOptions& opt) {
  return {check_rational_upper_bound(default_grid({0.25, 0.5, 1.0, 2.0, 10.0}), opt.tol)};
}

std::vector<VerificationReport> suite_appendix(const SuiteOptions& opt) {
  return {check_appendix_chain(opt.tol)};
}

std::vector<VerificationReport> suite_shifted(const SuiteOptions& opt) {
  return {check_shifted_envelope(default_grid({0.25, 0.5, 0.75, 1.0, 2.0, 5.0, 10.0}),
                                 opt.tol)};
}

std::vector<VerificationReport> suite_sandwich(const SuiteOptions& opt) {
  return {check_piecewise_envelope(default_grid({0.5, 1.0, 2.0, 10.0}), opt.tol)};
}

std::vector<VerificationReport> suite_thm12(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& dom : suite_domains(opt))
    out.push_back(check_j_transform_sandwich(dom, opt.samples, opt.seed, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_LU(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& dom : suite_domains(opt))
    for (double c : {1.0, 2.0, 5.0})
      out.push_back(check_j_comparison_factors(dom, c, opt.samples, opt.seed, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_w_axioms(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& dom : suite_domains(opt))
    for (double c : {1.0, 1.5, 2.0, 10.0})
      out.push_back(check_w_metric_axioms(dom, c, opt.samples, opt.seed, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_h_axioms(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& dom : suite_domains(opt))
    for (double c : {2.0, 3.0})
      out.push_back(check_h_metric_axioms(dom, c, opt.samples, opt.seed, opt.tol));
  out.push_back(check_h_sharpness(0.1, opt.samples, opt.seed, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_jrho(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  std::vector<Domain> doms;
  if (opt.domain) {
    doms = {*opt.domain};
  } else {
    doms = {Domain::unit_ball(2), Domain::unit_ball(3), Domain::half_space(2)};
  }
  for (const auto& dom : doms)
    out.push_back(check_j_vs_hyperbolic(dom, opt.samples, opt.seed, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_mobius(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (double lambda : {1.0, 2.0})
    out.push_back(check_mobius_invariance(lambda, opt.samples, opt.seed, opt.tol));
  return out;
}

std::vector<VerificationReport> suite_specfun(const SuiteOptions& opt) {
  const Tolerances& tol = opt.tol;
  std::vector<VerificationReport> out;
  const int n = 1000;
  auto r_grid = [&](int samples) {
    GridSpec g{{1.0}, 1e-6, 1.0 - 1e-6, samples, GridSpec::Spacing::Log};
    return g.t_nodes();
  };
  const double pi = std::numbers::pi;

  {
    ClaimChecker ck("specfun/mu-self-complementary", tol);
    ck.check_eq(grotzsch_mu(1.0 / std::sqrt(2.0)), pi / 2.0, 1e-12,
                [] { return Witness::ct(0.0, 0.0); });
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/mu-functional-identity", tol);
    // below r ~ 1e-3 the rounding of sqrt(1 - r^2) towards 1 already moves
    // mu of the complement by more than the tolerance, so the identity is
    // only testable from there up
    GridSpec ident{{1.0}, 1e-3, 1.0 - 1e-6, n, GridSpec::Spacing::Log};
    for (double r : ident.t_nodes()) {
      const double s = std::sqrt((1.0 - r) * (1.0 + r));
      ck.check_eq(grotzsch_mu(r) * grotzsch_mu(s), pi * pi / 4.0, 1e-10,
                  [&] { return Witness::ct(r, 0.0); });
    }
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/mu-monotone", tol);
    double prev = std::numeric_limits<double>::infinity();
    for (double r : r_grid(n)) {
      const double m = grotzsch_mu(r);
      ck.check_lt(m, prev, [&] { return Witness::ct(r, 0.0); });
      prev = m;
    }
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/mu-inverse-roundtrip", tol);
    for (double r : r_grid(n)) {
      ck.check_eq(grotzsch_mu_inv(grotzsch_mu(r), tol), r, 1e-10,
                  [&] { return Witness::ct(r, 0.0); });
    }
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/phi-identity", tol);
    for (double r : r_grid(200)) {
      ck.check_eq(phi_K(1.0, r, tol), r, 1e-10, [&] { return Witness::ct(r, 0.0); });
    }
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/phi-inverse-composition", tol);
    for (double K : {1.25, 2.0, 5.0}) {
      for (double r : r_grid(100)) {
        ck.check_eq(phi_K(K, phi_K(1.0 / K, r, tol), tol), r, 1e-9,
                    [&] { return Witness::ct(r, K); });
      }
    }
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/phi-K-expansion", tol);
    for (double r : r_grid(100)) {
      for (double K : {1.0, 1.5, 2.0, 4.0})
        ck.check_le(r, phi_K(K, r, tol), [&] { return Witness::ct(r, K); });
      for (double K : {0.25, 0.5, 1.0})
        ck.check_le(phi_K(K, r, tol), r, [&] { return Witness::ct(r, K); });
    }
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/cK-bracket", tol);
    for (int i = 0; i <= 90; ++i) {
      const double K = 1.0 + i * 0.1;
      const auto [lo, hi] = cK_bounds(K);
      ck.check_le(lo, hi, [&] { return Witness::ct(K, 0.0); });
    }
    const auto at_one = cK_bounds(1.0);
    ck.check_that(at_one.lower == 1.0 && at_one.upper == 1.0,
                  std::abs(at_one.upper - 1.0), [] { return Witness::ct(1.0, 0.0); });
    out.push_back(ck.report());
  }
  {
    ClaimChecker ck("specfun/agm-convergence", tol);
    for (double r : r_grid(200)) {
      const auto res = agm(1.0, r, tol);
      ck.check_le(static_cast<double>(res.iterations), 12.0,
                  [&] { return Witness::ct(r, 0.0); });
    }
    out.push_back(ck.report());
  }
  return out;
}

std::vector<VerificationReport> suite_schwarz(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  const Eigen::Vector2d a(0.3, -0.4);
  for (const auto& f :
       {TestMap::power(2), TestMap::radial_stretch(2.0),
        TestMap::mobius_conjugate(TestMap::radial_stretch(2.0), a)}) {
    out.push_back(check_hyperbolic_distortion(f, opt.samples, opt.seed, opt.tol));
  }
  return out;
}

std::vector<VerificationReport> suite_distow(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  const std::pair<TestMap, double> cases[] = {
      {TestMap::power(2), 1.0},
      {TestMap::radial_stretch(2.0), 1.0},
      {TestMap::radial_stretch(2.0), 2.0},
  };
  for (const auto& [f, lambda] : cases) {
    out.push_back(check_w_distortion(f, lambda, opt.samples, opt.seed, opt.tol));
    out.push_back(check_w_distortion_chain(f, lambda, opt.samples, opt.seed, opt.tol));
  }
  return out;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg = {
      {"prop-double-bound", &suite_double_bound},
      {"lemma-monotone", &suite_monotone},
      {"limit-L", &suite_limit},
      {"lemma-refined-upper", &suite_refined_upper},
      {"appendix", &suite_appendix},
      {"lemma-shifted", &suite_shifted},
      {"lemma-sandwich", &suite_sandwich},
      {"thm1.2", &suite_thm12},
      {"thm-LU", &suite_LU},
      {"W-metric-axioms", &suite_w_axioms},
      {"h-metric-axioms", &suite_h_axioms},
      {"jrho", &suite_jrho},
      {"mobius", &suite_mobius},
      {"specfun", &suite_specfun},
      {"schwarz", &suite_schwarz},
      {"distow", &suite_distow},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SuiteOptions& opt) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(opt);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all_suites(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& [name, fn] : registry()) {
    auto part = fn(opt);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace imetric
