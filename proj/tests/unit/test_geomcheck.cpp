#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmc/error.hpp"
#include "cmc/estimates.hpp"
#include "cmc/geomcheck.hpp"
#include "cmc/invariant_odes.hpp"
#include "cmc/profiles.hpp"

using namespace cmc;
using std::numbers::pi;

TEST_CASE("round sphere in R3") {
  const ProfileCurve p = make_profile({FamilyTag::EuclSphere, 1.0, 0.0});
  const SurfaceMap X = chart_surface(p);
  for (double tau : {-1.0, 0.3, 1.2}) {
    const DensitySample d = density_at(X, 0.0, tau, 0.7);
    CHECK(std::abs(d.sample.mean_curvature - 1.0) < 1e-7);
    CHECK(std::abs(d.sample.det_shape - 1.0) < 1e-6);
    CHECK(std::abs(d.q) < 1e-6);
    CHECK(d.sample.nu <= 1e-12);
  }
}

TEST_CASE("Hsiang sphere is CMC with vanishing density") {
  const ProfileCurve p = make_profile({FamilyTag::RotSphereH2xR, 1.0, 0.0});
  CHECK(mean_curvature_residual(p, 64) <= 1e-6);
  const DensityStats q = density_stats(p, 16, 4);
  CHECK(q.max_abs_q <= 1e-6);
  CHECK(std::abs(angle_at_top(p) + 1.0) < 1e-8);
}

TEST_CASE("CMC residual on invariant families") {
  CHECK(mean_curvature_residual(make_profile({FamilyTag::HypCylinderH2xR, 0.7, 0.0}), 64) <= 1e-6);
  CHECK(mean_curvature_residual(make_profile({FamilyTag::RotTorusS2xR, 1.0, 0.0}), 64) <= 1e-6);
  CHECK(mean_curvature_residual(make_profile({FamilyTag::ParabolicH2xR, 1.0, 0.0}), 64) <= 1e-6);
  CHECK(mean_curvature_residual(make_profile({FamilyTag::EuclCylinder, 1.5, 0.0}), 32) <= 1e-6);
  CHECK(mean_curvature_residual(make_profile({FamilyTag::HypGeneralH2xR, 1.0, 0.3}), 32) <= 1e-6);
  CHECK_THROWS_AS(mean_curvature_residual(make_profile({FamilyTag::EuclSphere, 1.0, 0.0}), 0),
                  InvalidInputError);
}

TEST_CASE("boundary meets the slice orthogonally") {
  for (FamilyTag tag : {FamilyTag::RotSphereS2xR, FamilyTag::RotTorusS2xR,
                        FamilyTag::HypCylinderH2xR, FamilyTag::RotSphereH2xR}) {
    const ProfileCurve p = make_profile({tag, 1.0, 0.0});
    for (double nu : boundary_angles(p)) CHECK(std::abs(nu) < 1e-6);
  }
  CHECK(boundary_angles(make_profile({FamilyTag::RotTorusS2xR, 1.0, 0.0})).size() == 2);
  CHECK_THROWS_AS(boundary_angles(make_profile({FamilyTag::ParabolicH2xR, 1.0, 0.0})),
                  DomainError);
}

TEST_CASE("measured boundary curvature") {
  for (double H : {0.6, 1.0, 2.0}) {
    for (double k : measured_boundary_kappas(make_profile({FamilyTag::RotSphereS2xR, H, 0.0})))
      CHECK(std::abs(k - (-H + 1.0 / (4.0 * H))) < 1e-6);
    for (double k : measured_boundary_kappas(make_profile({FamilyTag::RotTorusS2xR, H, 0.0})))
      CHECK(std::abs(k - 1.0 / (2.0 * H)) < 1e-6);
    for (double k : measured_boundary_kappas(make_profile({FamilyTag::HypCylinderH2xR, H, 0.0})))
      CHECK(std::abs(k + 1.0 / (2.0 * H)) < 1e-6);
  }
}

TEST_CASE("identities from the Gauss equation and the normal") {
  const ProfileCurve p = make_profile({FamilyTag::RotTorusS2xR, 1.0, 0.0});
  const SurfaceMap X = chart_surface(p);
  for (double tau : {0.8, 1.3, 2.0}) {
    const DensitySample d = density_at(X, 1.0, tau, 0.4);
    CHECK(std::abs(d.gauss_equation_defect) < 1e-4);
    CHECK(d.grad_nu_defect < 1e-5);
    CHECK(d.sample.det_shape <= d.sample.mean_curvature * d.sample.mean_curvature + 1e-8);
  }
  const ProfileCurve h = make_profile({FamilyTag::HypCylinderH2xR, 0.8, 0.0});
  const DensitySample d = density_at(chart_surface(h), -1.0, 0.2, 0.1);
  CHECK(std::abs(d.gauss_equation_defect) < 1e-4);
}

TEST_CASE("degenerate immersion") {
  const SurfaceMap flat = [](double u, double) {
    return make_point(SpaceForm(0.0), {u, 0.0, 0.0}, 0.0);
  };
  CHECK_THROWS_AS(fundamental_forms_at(flat, 0.0, 0.0), SingularParametrizationError);
}

TEST_CASE("density is constant along orbits") {
  for (const ProfileFamily f : {ProfileFamily{FamilyTag::RotTorusS2xR, 1.0, 0.0},
                                ProfileFamily{FamilyTag::HypCylinderH2xR, 1.0, 0.0},
                                ProfileFamily{FamilyTag::EuclCylinder, 1.0, 0.0}}) {
    const DensityStats s = density_stats(make_profile(f), 8, 6, 1e-2);
    CHECK(s.orbit_variation <= 1e-8);
  }
}

TEST_CASE("meridian of the Euclidean hemisphere") {
  const ProfileCurve p = make_profile({FamilyTag::EuclSphere, 1.0, 0.0});
  CHECK(std::abs(meridian_length(p) - pi / 2) < 1e-6);
  const ProfileCurve s = make_profile({FamilyTag::RotSphereS2xR, 1.0, 0.0});
  CHECK(std::abs(meridian_length(s) - distance_lower_bound({1.0, 1.0, 0.0, {}}, max_height(s))) <
        1e-6);
}

TEST_CASE("profile sweep stays inside the estimates") {
  const ProfileCurve p = make_profile({FamilyTag::RotSphereS2xR, 0.8, 0.0});
  const ProfileSweep s = sweep_profile(p, 64);
  const EstimateParams e{1.0, 0.8, 0.0, {}};
  for (std::size_t i = 0; i < s.tau.size(); ++i) {
    CHECK(s.nu[i] * s.nu[i] >= zeta(e, std::abs(s.height[i])) - 1e-6);
    CHECK(s.nu[i] * s.nu[i] + s.height_slope[i] * s.height_slope[i] <= 1.0 + 1e-8);
    CHECK(std::abs(s.mean_curvature[i] - 0.8) < 1e-6);
  }
}

TEST_CASE("ODE route against closed forms") {
  for (FamilyTag tag : {FamilyTag::RotSphereH2xR, FamilyTag::HypCylinderH2xR,
                        FamilyTag::RotTorusS2xR, FamilyTag::ParabolicH2xR}) {
    const ProfileCurve p = make_profile({tag, 1.0, 0.0});
    const auto r = ode_cross_check(p);
    REQUIRE(r.has_value());
    CHECK(r->sup_deviation < 1e-8);
    if (p.is_bigraph()) CHECK(std::abs(r->ode_max_height - max_height(p)) < 1e-8);
  }
  CHECK_FALSE(ode_cross_check(make_profile({FamilyTag::EuclCylinder, 1.0, 0.0})).has_value());
  const auto e = ode_cross_check(make_profile({FamilyTag::HypGeneralH2xR, 1.0, 0.4}));
  REQUIRE(e.has_value());
  CHECK(e->invariant_drift < 1e-9);
  CHECK(e->sup_deviation < 1e-8);
}
