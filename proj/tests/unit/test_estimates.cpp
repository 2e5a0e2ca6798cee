#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracle.hpp"
#include "cmc/error.hpp"
#include "cmc/estimates.hpp"

using namespace cmc;
using std::numbers::pi;

namespace {

double g_by_simpson(const EstimateParams& p, double t) {
  return oracle::simpson(
      [&](double s) { return 4.0 * p.H / (4.0 * p.H * p.H + p.c * (1.0 - s * s)); }, 0.0, t);
}

}  // namespace

TEST_CASE("g against direct integration") {
  CHECK(g_value({0.0, 1.0, 0.0, {}}, 0.0) == 0.0);
  CHECK(g_value({1.0, 2.0, 0.0, {}}, 0.0) == 0.0);
  CHECK(std::abs(g_value({0.0, 1.0, 0.0, {}}, 1.0) - 1.0) < 1e-15);
  CHECK(std::abs(g_value({-1.0, 1.0, 0.0, {}}, 1.0) - 2.0 * pi / (3.0 * std::sqrt(3.0))) < 1e-14);
  for (double c : {-3.0, -1.0, 0.0, 0.5, 2.0})
    for (double t : {-0.9, -0.2, 0.4, 1.0}) {
      const EstimateParams p{c, 1.1, 0.0, {}};
      CHECK(std::abs(g_value(p, t) - g_by_simpson(p, t)) < 1e-12);
      CHECK(std::abs(g_inverse(p, g_value(p, t)) - t) < 1e-12);
      CHECK(g_derivative(p, t) == doctest::Approx(4.4 / (4.84 + c * (1.0 - t * t))).epsilon(1e-14));
    }
  CHECK_THROWS_AS(g_value({0.0, 1.0, 0.0, {}}, 1.5), DomainError);
}

TEST_CASE("maximal height") {
  CHECK(alpha_max({0.0, 1.0, 0.0, {}}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(alpha_max({1.0, 1.0, 0.0, {}}) - 4.0 / std::sqrt(5.0) * std::atanh(1.0 / std::sqrt(5.0))) <
        1e-15);
  CHECK(alpha_max({-1.0, 0.8, -1.0 + 1e-12, {}}) < 1e-11);
  CHECK(alpha_max({0.0, 2.0, -0.5, {}}) == doctest::Approx(0.25).epsilon(1e-15));
  // alpha = g(1) + g(nu0).
  const EstimateParams p{-0.5, 0.7, -0.4, {}};
  CHECK(std::abs(alpha_max(p) - g_by_simpson(p, 1.0) - g_by_simpson(p, -0.4)) < 1e-12);
}

TEST_CASE("boundary curvature bounds") {
  CHECK(kappa_lower_general({1.0, 1.0, 0.0, {}}) == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(kappa_lower_general({0.0, 1.7, 0.0, {}}) == doctest::Approx(-1.7).epsilon(1e-15));
  CHECK(kappa_lower_general({-1.0, 1.0, -0.5, {}}) ==
        doctest::Approx(-19.0 / (8.0 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK(kappa_lower_height({1.0, 1.0, 0.0, 0.5}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kappa_lower_height({-1.0, 1.0, 0.0, 0.5}) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(kappa_lower_height({0.0, 1.0, 0.0, 0.25}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(kappa_lower_height({0.0, 1.0, 0.0, {}}), InvalidInputError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(alpha_max({-4.0, 1.0, 0.0, {}}), InvalidInputError);
  CHECK_THROWS_AS(alpha_max({0.0, 0.0, 0.0, {}}), InvalidInputError);
  CHECK_THROWS_AS(alpha_max({0.0, 1.0, 0.1, {}}), InvalidInputError);
  CHECK_THROWS_AS(alpha_max({0.0, 1.0, -1.0, {}}), InvalidInputError);
  CHECK_THROWS_AS(kappa_lower_height({0.0, 1.0, 0.0, 0.6}), InvalidInputError);
  CHECK_THROWS_AS(kappa_lower_height({0.0, 1.0, 0.0, 0.0}), InvalidInputError);
}

TEST_CASE("comparison function") {
  const EstimateParams flat{0.0, 1.0, 0.0, {}};
  CHECK(zeta(flat, 0.0) == 0.0);
  CHECK(zeta(flat, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(zeta(flat, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(zeta(flat, 1.1), DomainError);
  CHECK_THROWS_AS(zeta(flat, -0.1), DomainError);

  // zeta(g(t) + g(nu0)) = t^2 for |nu0| <= t <= 1.
  for (double c : {-1.0, 0.0, 1.0})
    for (double nu0 : {0.0, -0.3}) {
      const EstimateParams p{c, 1.0, nu0, {}};
      for (int i = 0; i <= 100; ++i) {
        const double t = std::abs(nu0) + (1.0 - std::abs(nu0)) * i / 100;
        const double s = std::min(g_value(p, t) + g_value(p, nu0), alpha_max(p));
        CHECK(std::abs(zeta(p, s) - t * t) < 1e-10);
      }
    }

  // Complement near the top keeps its relative accuracy.
  const EstimateParams p{1.0, 1.0, 0.0, {}};
  const double a = alpha_max(p);
  const double d = 1e-9;
  const double t = g_inverse(p, a - d);
  CHECK(one_minus_zeta(p, a - d) == doctest::Approx((1.0 - t) * (1.0 + t)).epsilon(1e-5));
  CHECK(one_minus_zeta(p, a - d) == doctest::Approx(2.0 * d * 5.0 / 4.0).epsilon(1e-6));
}

TEST_CASE("distance bound") {
  const EstimateParams flat{0.0, 1.0, 0.0, {}};
  CHECK(distance_lower_bound(flat, 0.0) == 0.0);
  CHECK(std::abs(distance_lower_bound(flat, 1.0) - pi / 2) < 1e-10);
  CHECK(std::abs(distance_lower_bound(flat, 0.5) - pi / 6) < 1e-10);
  CHECK_THROWS_AS(distance_lower_bound(flat, 1.2), DomainError);

  // Reference: integral of 1/sqrt(1 - zeta) with zeta from g by Simpson.
  for (double c : {-1.0, 1.0}) {
    const EstimateParams p{c, 0.9, -0.2, {}};
    const double a = alpha_max(p);
    const double ref = oracle::sqrt_singular(
        [&](double s) { return 1.0 / std::sqrt(std::max(1e-300, 1.0 - zeta(p, s))); }, 0.0, a);
    CHECK(std::abs(distance_lower_bound(p, a) - ref) < 1e-7);
  }
}

TEST_CASE("convexity height caps") {
  const ConvexityCap pos = convexity_height_cap({1.0, 1.0, -0.3, {}});
  CHECK(pos.difference_of_squares == 0.5);
  CHECK(pos.square_of_difference == 0.5);
  const double H = 1.0, c = -1.0, nu0 = -0.3;
  const ConvexityCap neg = convexity_height_cap({c, H, nu0, {}});
  CHECK(neg.difference_of_squares ==
        doctest::Approx((4 * H * H + c * (1 - nu0 * nu0)) / (8 * H * H)).epsilon(1e-15));
  CHECK(neg.square_of_difference ==
        doctest::Approx((4 * H * H + c * (1 - nu0) * (1 - nu0)) / (8 * H * H)).epsilon(1e-15));
}
