#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracle.hpp"
#include "cmc/error.hpp"
#include "cmc/estimates.hpp"
#include "cmc/profiles.hpp"

using namespace cmc;
using std::numbers::pi;

TEST_CASE("Hsiang sphere") {
  const ProfileCurve p = make_profile({FamilyTag::RotSphereH2xR, 1.0, 0.0});
  CHECK(p.domain().lo == 0.0);
  CHECK(p.domain().hi == doctest::Approx(2.0 * std::asinh(1.0 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(std::abs(p.height(0.0) - 2.0 * pi / (3.0 * std::sqrt(3.0))) < 1e-14);
  CHECK(std::abs(p.height(p.domain().hi)) < 1e-7);
  CHECK(p.is_bigraph());
  const AmbientPoint axis = sample_surface(p, 0.0, 1.3);
  CHECK(std::abs(axis.base[0]) < 1e-15);
  CHECK(std::abs(axis.base[1]) < 1e-15);
  CHECK(axis.base[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(axis.height == doctest::Approx(alpha_max({-1.0, 1.0, 0.0, {}})).epsilon(1e-14));
  CHECK_THROWS_AS(p.height(-0.1), DomainError);
}

TEST_CASE("hyperbolic cylinder") {
  const double w = std::sqrt(3.0);
  const ProfileCurve p = make_profile({FamilyTag::HypCylinderH2xR, 1.0, 0.0});
  CHECK(std::abs(p.height(0.0) - pi / (3.0 * w)) < 1e-14);
  const AmbientPoint q = sample_surface(p, pi / 2, 0.0);
  const auto xy = to_halfplane(q);
  CHECK(xy[0] == doctest::Approx(1.0 / w).epsilon(1e-14));
  CHECK(xy[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(q.height) < 1e-15);
}

TEST_CASE("torus and sphere in S2 x R") {
  const ProfileCurve torus = make_profile({FamilyTag::RotTorusS2xR, 1.0, 0.0});
  const AmbientPoint q = sample_surface(torus, pi / 2, 0.4);
  CHECK(q.base[0] == doctest::Approx(std::cos(0.4)).epsilon(1e-14));
  CHECK(q.base[1] == doctest::Approx(std::sin(0.4)).epsilon(1e-14));
  CHECK(std::abs(q.base[2]) < 1e-15);
  const double sphere_top = 4.0 / std::sqrt(5.0) * std::atanh(1.0 / std::sqrt(5.0));
  CHECK(std::abs(q.height - sphere_top / 2) < 1e-14);

  const ProfileCurve sphere = make_profile({FamilyTag::RotSphereS2xR, 1.0, 0.0});
  CHECK(std::abs(max_height(sphere) - sphere_top) < 1e-14);
  CHECK(std::abs(sphere.height(0.0) - sphere_top) < 1e-12);
  CHECK(std::abs(max_height(torus) - sphere_top / 2) < 1e-14);
  CHECK(max_height(make_profile({FamilyTag::EuclSphere, 2.0, 0.0})) == doctest::Approx(0.5));

  // Quadrature heights against an independent integration of the first
  // integral in the variable u = tan(s/2).
  const double H = 0.3;
  const ProfileCurve s3 = make_profile({FamilyTag::RotSphereS2xR, H, 0.0});
  const double r = 0.4;
  const double part = oracle::simpson(
      [&](double s) {
        const double phi = -2.0 * H * std::tan(0.5 * s);
        return phi / std::sqrt(1.0 - phi * phi);
      },
      0.0, r);
  CHECK(std::abs(s3.height(r) - s3.height(0.0) - part) < 1e-10);
}

TEST_CASE("boundary curvature closed forms") {
  CHECK(boundary_kappa(make_profile({FamilyTag::RotSphereS2xR, 1.0, 0.0})) == doctest::Approx(-0.75));
  CHECK(boundary_kappa(make_profile({FamilyTag::RotTorusS2xR, 1.0, 0.0})) == doctest::Approx(0.5));
  CHECK(boundary_kappa(make_profile({FamilyTag::HypCylinderH2xR, 1.0, 0.0})) == doctest::Approx(-0.5));
  const ProfileCurve parab = make_profile({FamilyTag::ParabolicH2xR, 1.0, 0.0});
  CHECK_THROWS_AS(boundary_kappa(parab), InvalidInputError);
  CHECK_THROWS_AS(max_height(parab), InvalidInputError);
}

TEST_CASE("energy and bigraphs") {
  CHECK(make_profile({FamilyTag::HypGeneralH2xR, 1.0, 0.0}).is_bigraph());
  const ProfileCurve p = make_profile({FamilyTag::HypGeneralH2xR, 1.0, 0.3});
  CHECK_FALSE(p.is_bigraph());
  CHECK(std::abs(p.height(p.domain().hi) - p.height(p.domain().lo)) > 1e-3);
  // Zero energy matches the cylinder at the same natural parameter.
  const ProfileCurve g = make_profile({FamilyTag::HypGeneralH2xR, 0.8, 0.0});
  const ProfileCurve cyl = make_profile({FamilyTag::HypCylinderH2xR, 0.8, 0.0});
  const double w = std::sqrt(4.0 * 0.64 - 1.0);
  for (double t : {-0.5, 0.0, 0.7}) {
    CHECK(std::abs(g.base(t) - cyl.base(w * t)) < 1e-14);
    CHECK(std::abs(g.height(t) - cyl.height(w * t)) < 1e-10);
  }
}

TEST_CASE("general rotational profiles in S2 x R") {
  const ProfileCurve sphere = make_profile({FamilyTag::RotSphereS2xR, 0.8, 0.0});
  const ProfileCurve g1 = make_profile({FamilyTag::RotGeneralS2xR, 0.8, -1.0});
  for (double r : {-0.5, 0.0, 0.9}) CHECK(std::abs(g1.height(r) - sphere.height(r)) < 1e-10);
  const ProfileCurve torus = make_profile({FamilyTag::RotTorusS2xR, 0.8, 0.0});
  const ProfileCurve g0 = make_profile({FamilyTag::RotGeneralS2xR, 0.8, 0.0});
  for (double r : {1.1, pi / 2, 2.0}) CHECK(std::abs(g0.height(r) - torus.height(r)) < 1e-10);

  CHECK(g1.is_bigraph());
  CHECK(g0.is_bigraph());
  CHECK(make_profile({FamilyTag::RotGeneralS2xR, 1.0, 1.0}).is_bigraph());
  CHECK_FALSE(make_profile({FamilyTag::RotGeneralS2xR, 1.0, 0.3}).is_bigraph());
  CHECK_FALSE(make_profile({FamilyTag::RotGeneralS2xR, 0.3, 1.2}).is_bigraph());
  CHECK_THROWS_AS(make_profile({FamilyTag::RotGeneralS2xR, 1.0, 2.0}), NoSolutionError);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(make_profile({FamilyTag::RotSphereH2xR, 0.5, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(make_profile({FamilyTag::HypCylinderH2xR, 0.4, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(make_profile({FamilyTag::ParabolicH2xR, 0.5, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(make_profile({FamilyTag::RotTorusS2xR, 0.0, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(make_profile({FamilyTag::EuclSphere, -1.0, 0.0}), InvalidInputError);
}

TEST_CASE("torus height maximizer") {
  const TorusArgmax best = torus_height_argmax();
  CHECK(std::abs(best.H - 0.331372) < 1e-4);
  CHECK(std::abs(best.height - alpha_max({1.0, best.H, 0.0, {}}) / 2) < 1e-15);
  for (double H : {0.2, 0.3, 0.36, 0.5})
    CHECK(alpha_max({1.0, H, 0.0, {}}) / 2 <= best.height);
}

TEST_CASE("parabolic profile") {
  for (double H : {0.6, 1.0, 5.0}) {
    const double w = std::sqrt(4.0 * H * H - 1.0);
    // alpha' = -2H - cos(alpha), by central differences.
    for (double t : {0.1, 1.0, 2.5}) {
      const double d = 1e-5;
      const double slope = (parabolic_alpha(H, t + d) - parabolic_alpha(H, t - d)) / (2 * d);
      CHECK(std::abs(slope + 2 * H + std::cos(parabolic_alpha(H, t))) < 1e-8);
    }
    // Height drift over one period, against a reference integration.
    const oracle::Rhs f = [H](double, const std::vector<double>& y) {
      return std::vector<double>{std::cos(y[1]), -2.0 * H - std::cos(y[1])};
    };
    const double t1 = parabolic_critical_param(H, 1);
    CHECK(t1 == doctest::Approx(pi / w));
    const auto ref = oracle::rk4(f, {0.0, 0.0}, 0.0, t1, 20000);
    const double drift = parabolic_obstruction(H);
    CHECK(std::abs(drift - std::abs(ref[0])) < 1e-10);
    CHECK(std::abs(drift - pi * (2.0 * H / w - 1.0)) < 1e-12);
    CHECK(drift > 0.0);
  }
  CHECK_FALSE(make_profile({FamilyTag::ParabolicH2xR, 1.0, 0.0}).is_bigraph());
}

TEST_CASE("intrinsic base coordinate") {
  const ProfileCurve cyl = make_profile({FamilyTag::HypCylinderH2xR, 1.0, 0.0});
  CHECK(cyl.base_arclength_of(0.5) == doctest::Approx(std::asinh(0.5)));
  CHECK(cyl.base_arclength(0.3) == doctest::Approx(std::asinh(cyl.base(0.3))));
  const ProfileCurve par = make_profile({FamilyTag::ParabolicH2xR, 1.0, 0.0});
  CHECK(par.base_arclength_of(std::exp(1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(par.base_arclength_of(-1.0), DomainError);
}
