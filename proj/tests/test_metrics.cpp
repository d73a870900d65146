#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "imetric/metrics.hpp"
#include "imetric/sampling.hpp"

using namespace imetric;

namespace {

// Frozen from tests/oracles/highprec_constants.py (mpmath, 50 digits).
constexpr double kArccosh55 = 2.3895264345742186;
constexpr double kF1_of_1 = 0.71402306062970876;
constexpr double kFhalf_of_1 = 0.41943067107331783;
constexpr double kLog52 = 0.91629073187415507;
constexpr double kWBallExample = 0.53479999673957037;  // log(1 + 1/sqrt(2))

Point pt(std::initializer_list<double> coords) {
  Point p(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) p[i++] = c;
  return p;
}

}  // namespace

TEST_CASE("distance ratio metric: direct substitutions") {
  const Domain ball = Domain::unit_ball(2);
  CHECK(j_metric(ball, pt({0.0, 0.0}), pt({0.0, 0.0})) == 0.0);
  CHECK(j_metric(ball, pt({0.0, 0.0}), pt({0.5, 0.0})) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));

  const Domain half = Domain::half_space(2);
  CHECK(j_metric(half, pt({0.0, 1.0}), pt({0.0, 3.0})) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-15));

  CHECK_THROWS_AS(j_metric(ball, pt({0.0, 0.0}), pt({1.5, 0.0})), std::domain_error);
}

TEST_CASE("h metric: direct substitutions and parameter guard") {
  const Domain ball = Domain::unit_ball(2);
  CHECK(h_metric(ball, 2.0, pt({0.0, 0.0}), pt({0.0, 0.0})) == 0.0);
  // log(1 + 2*(1/2)/sqrt(1/2)) = log(1 + sqrt 2)
  CHECK(h_metric(ball, 2.0, pt({0.0, 0.0}), pt({0.5, 0.0})) ==
        doctest::Approx(std::log1p(std::sqrt(2.0))).epsilon(1e-15));
  CHECK_THROWS_AS(h_metric(ball, 0.0, pt({0.0, 0.0}), pt({0.5, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("hyperbolic metric of the ball") {
  CHECK(hyperbolic_ball(pt({0.0, 0.0}), pt({0.0, 0.0})) == 0.0);
  // at the origin the formula collapses to 2 artanh(|y|)
  CHECK(hyperbolic_ball(pt({0.0, 0.0}), pt({0.5, 0.0})) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(hyperbolic_ball(pt({1.0, 0.0}), pt({0.0, 0.0})), std::domain_error);

  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Vector2d x = sample_disk(rng, 0.999);
    const Eigen::Vector2d y = sample_disk(rng, 0.999);
    const double d = hyperbolic_ball(x, y);
    CHECK(d >= 0.0);
    CHECK(d == hyperbolic_ball(y, x));
    if ((x - y).norm() > 0) CHECK(d > 0.0);
  }
}

TEST_CASE("hyperbolic metric of the half-space") {
  CHECK(hyperbolic_halfspace(pt({0.0, 1.0}), pt({0.0, 1.0})) == 0.0);
  // arccosh(1 + 1/4) = log 2
  CHECK(hyperbolic_halfspace(pt({0.0, 1.0}), pt({0.0, 2.0})) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // arccosh(1 + 9/2) = arccosh(5.5)
  CHECK(hyperbolic_halfspace(pt({0.0, 1.0}), pt({3.0, 1.0})) ==
        doctest::Approx(kArccosh55).epsilon(1e-14));
  CHECK_THROWS_AS(hyperbolic_halfspace(pt({0.0, 0.0}), pt({0.0, 1.0})),
                  std::domain_error);
}

TEST_CASE("hyperbolic ball metric is Mobius invariant") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const Eigen::Vector2d a = sample_disk(rng, 0.95);
    const Eigen::Vector2d x = sample_disk(rng, 0.95);
    const Eigen::Vector2d y = sample_disk(rng, 0.95);
    const double before = hyperbolic_ball(x, y);
    const double after = hyperbolic_ball(mobius_to_origin(a, x), mobius_to_origin(a, y));
    CHECK(std::abs(before - after) <= 1e-12);
  }
}

TEST_CASE("w_transform values and monotonicity") {
  CHECK(w_transform(1.0, 0.0) == 0.0);
  CHECK(w_transform(7.3, 0.0) == 0.0);
  // sinh(log 2) = 3/4, so the transform of 2 log 2 at c = 1 is log(5/2)
  CHECK(w_transform(1.0, 2.0 * std::log(2.0)) == doctest::Approx(kLog52).epsilon(1e-15));
  CHECK(w_transform(1.0, 1.0) == doctest::Approx(kF1_of_1).epsilon(1e-15));
  // the linear envelope endpoints at (c, t) = (1/2, 1)
  CHECK(w_transform(0.5, 1.0) == doctest::Approx(kFhalf_of_1).epsilon(1e-15));
  CHECK(1.0 / 6.0 < kFhalf_of_1);
  CHECK(kFhalf_of_1 < 0.5);

  double prev = 0.0;
  for (double t : {0.25, 0.5, 1.0, 5.0, 50.0, 700.0}) {  // increasing in t, no overflow
    const double v = w_transform(2.0, t);
    CHECK(v > prev);
    CHECK(std::isfinite(v));
    prev = v;
  }
  prev = 0.0;
  for (double c : {0.5, 1.0, 2.0, 4.0}) {  // increasing in c
    const double v = w_transform(c, 1.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("w metric over the distance ratio base") {
  const MetricSpec spec{BaseMetric::DistanceRatio, 1.0, Domain::unit_ball(2)};
  CHECK(w_metric(spec, pt({0.3, 0.2}), pt({0.3, 0.2})) == 0.0);
  // j = log 2, then log(1 + 2 sinh(log(2)/2)) = log(1 + 1/sqrt 2)
  CHECK(w_metric(spec, pt({0.0, 0.0}), pt({0.5, 0.0})) ==
        doctest::Approx(kWBallExample).epsilon(1e-14));
}

TEST_CASE("w metric over the hyperbolic base is Mobius invariant") {
  for (double lambda : {1.0, 2.0}) {
    const MetricSpec spec{BaseMetric::Hyperbolic, lambda, Domain::unit_ball(2)};
    Rng rng(17);
    for (int i = 0; i < 2000; ++i) {
      const Eigen::Vector2d a = sample_disk(rng, 0.95);
      const Eigen::Vector2d x = sample_disk(rng, 0.95);
      const Eigen::Vector2d y = sample_disk(rng, 0.95);
      const double before = w_metric(spec, x, y);
      const double after =
          w_metric(spec, mobius_to_origin(a, x), mobius_to_origin(a, y));
      CHECK(std::abs(before - after) <= 1e-12);
    }
  }
}

TEST_CASE("w metric base selection guards") {
  const Domain sq = Domain::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  const MetricSpec bad{BaseMetric::Hyperbolic, 1.0, sq};
  CHECK_THROWS_AS(w_metric(bad, pt({0.5, 0.5}), pt({0.6, 0.5})), std::invalid_argument);

  // composing the transform with the h base evaluates and stays nonnegative
  const MetricSpec overH{BaseMetric::HMetric, 2.0, sq};
  CHECK(w_metric(overH, pt({0.5, 0.5}), pt({0.6, 0.5})) > 0.0);
}

TEST_CASE("Mobius normalization and self-map property") {
  const Eigen::Vector2d a(0.4, -0.3);
  CHECK(mobius_to_origin(a, a).norm() <= 1e-15);
  const Eigen::Vector2d x(0.2, 0.7);
  CHECK((mobius_to_origin(Eigen::Vector2d(0.0, 0.0), x) - x).norm() == 0.0);
  CHECK((mobius_from_origin(a, mobius_to_origin(a, x)) - x).norm() <= 1e-15);

  Rng rng(23);
  for (int i = 0; i < 100000; ++i) {
    const Eigen::Vector2d aa = sample_disk(rng);
    const Eigen::Vector2d zz = sample_disk(rng);
    CHECK(mobius_to_origin(aa, zz).norm() < 1.0);
  }
  CHECK_THROWS_AS(mobius_to_origin(Eigen::Vector2d(1.2, 0.0), x), std::domain_error);
}

TEST_CASE("j <= rho <= 2j on ball and half-space") {
  Rng rng(29);
  const Domain ball = Domain::unit_ball(2);
  const Domain half = Domain::half_space(2);
  for (int i = 0; i < 5000; ++i) {
    const Point x = sample_point(ball, rng);
    const Point y = sample_point(ball, rng);
    const double j = j_metric(ball, x, y);
    const double rho = hyperbolic_ball(x, y);
    CHECK(j <= rho + 1e-12);
    CHECK(rho <= 2.0 * j + 1e-12);

    const Point u = sample_point(half, rng);
    const Point v = sample_point(half, rng);
    const double jh = j_metric(half, u, v);
    const double rh = hyperbolic_halfspace(u, v);
    CHECK(jh <= rh + 1e-12);
    CHECK(rh <= 2.0 * jh + 1e-12);
  }
}

TEST_CASE("squaring the disk is a contraction of the transformed metric") {
  // z -> z^2 is 1-Lipschitz for the hyperbolic metric, and the transform
  // preserves 1-Lipschitz maps
  for (double lambda : {1.0, 2.0}) {
    const MetricSpec spec{BaseMetric::Hyperbolic, lambda, Domain::unit_ball(2)};
    Rng rng(31);
    for (int i = 0; i < 5000; ++i) {
      const Eigen::Vector2d x = sample_disk(rng, 0.999);
      const Eigen::Vector2d y = sample_disk(rng, 0.999);
      const Eigen::Vector2d fx(x.x() * x.x() - x.y() * x.y(), 2.0 * x.x() * x.y());
      const Eigen::Vector2d fy(y.x() * y.x() - y.y() * y.y(), 2.0 * y.x() * y.y());
      CHECK(w_metric(spec, fx, fy) <= w_metric(spec, x, y) + 1e-12);
    }
  }
}

TEST_CASE("h metric sits between the transformed and scaled distance ratio") {
  // transform(c, j) <= h_c for every c (the c cancels from the comparison);
  // h_c <= c j needs c >= 1: log(1 + c v) <= c log(1 + v) flips below c = 1
  Rng rng(37);
  for (const Domain& dom :
       {Domain::unit_ball(2), Domain::half_space(2),
        Domain::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}})}) {
    for (double c : {0.5, 1.0, 2.0, 5.0}) {
      for (int i = 0; i < 3000; ++i) {
        const Point x = sample_point(dom, rng);
        const Point y = sample_point(dom, rng);
        const double j = j_metric(dom, x, y);
        const double h = h_metric(dom, c, x, y);
        CHECK(w_transform(c, j) <= h + 1e-12);
        if (c >= 1.0) CHECK(h <= c * j + 1e-12);
      }
    }
  }
}

TEST_CASE("the scaled distance ratio fails to dominate h below c = 1") {
  // witness that the c >= 1 restriction above is genuine: with equal
  // boundary distances, h_{1/2} = log 2 while j/2 = log(3)/2
  const Domain ball = Domain::unit_ball(2);
  const Point x = pt({0.5, 0.0});
  const Point y = pt({-0.5, 0.0});
  CHECK(h_metric(ball, 0.5, x, y) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(h_metric(ball, 0.5, x, y) > 0.5 * j_metric(ball, x, y));
}
