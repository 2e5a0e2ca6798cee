#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracle.hpp"
#include "cmc/error.hpp"
#include "cmc/invariant_odes.hpp"
#include "cmc/numerics.hpp"
#include "cmc/profiles.hpp"

using namespace cmc;
using std::numbers::pi;

namespace {

OdeSystem oscillator() {
  OdeSystem s;
  s.dimension = 2;
  s.rhs = [](double, std::span<const double> y, std::span<double> d) {
    d[0] = y[1];
    d[1] = -y[0];
  };
  s.invariant = [](std::span<const double> y) { return y[0] * y[0] + y[1] * y[1]; };
  return s;
}

}  // namespace

TEST_CASE("harmonic oscillator over one period") {
  OdeOptions o;
  o.rtol = 1e-10;
  const OdeSolution sol = integrate_ivp(oscillator(), {1.0, 0.0}, {0.0, 2.0 * pi}, o);
  const State end = sol(2.0 * pi);
  CHECK(std::abs(end[0] - 1.0) < 1e-8);
  CHECK(std::abs(end[1]) < 1e-8);
  CHECK(sol.max_invariant_drift() < 1e-8);
  // Dense output between nodes.
  CHECK(std::abs(sol.component(1.0, 0) - std::cos(1.0)) < 1e-8);
}

TEST_CASE("backward integration") {
  const OdeSolution sol = integrate_ivp(oscillator(), {1.0, 0.0}, {0.0, -pi}, 1e-11, 1e-13);
  CHECK(std::abs(sol.component(-pi, 0) + 1.0) < 1e-9);
  CHECK(std::abs(sol.component(-0.5, 1) - std::sin(0.5)) < 1e-9);
}

TEST_CASE("blow-up reports the parameter reached") {
  OdeSystem s;
  s.dimension = 1;
  s.rhs = [](double, std::span<const double> y, std::span<double> d) { d[0] = y[0] * y[0]; };
  try {
    integrate_ivp(s, {1.0}, {0.0, 2.0});
    FAIL("expected a step underflow");
  } catch (const StepUnderflowError& e) {
    CHECK(e.reached() == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("hyperbolic-translation system reproduces the zero-energy cylinder") {
  const double H = 1.0, w = std::sqrt(3.0);
  const double t0 = -pi / (2.0 * w), t1 = pi / (2.0 * w);
  const State y0{0.0, -1.0 / w, 0.0};
  const OdeSolution sol = integrate_ivp(hyperbolic_translation_system(H), y0, {t0, t1}, 1e-12, 1e-14);
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = t0 + (t1 - t0) * i / 400;
    const double r = w * t;
    const double x = std::sin(r) / w;
    const double h = 2.0 * H / w * std::atan(std::cos(r) / std::sqrt(w * w + std::sin(r) * std::sin(r)));
    worst = std::max({worst, std::abs(sol.component(t, 1) - x), std::abs(sol.component(t, 0) - h)});
  }
  CHECK(worst <= 1e-8);
  CHECK(sol.max_invariant_drift() <= 1e-9);
}

TEST_CASE("parabolic system: ordinate is proportional to 2H + cos(alpha)") {
  const double H = 1.0;
  const ProfileCurve p = make_profile({FamilyTag::ParabolicH2xR, H, 0.0});
  const double T = p.domain().hi;
  const OdeSolution sol =
      integrate_ivp(parabolic_translation_system(H), {2.0 * H + 1.0, 0.0, 0.0}, {0.0, T}, 1e-12, 1e-14);
  // Independent reference trajectory.
  const oracle::Rhs f = [H](double, const std::vector<double>& y) {
    return std::vector<double>{y[0] * std::sin(y[2]), std::cos(y[2]), -2.0 * H - std::cos(y[2])};
  };
  double worst = 0.0;
  for (int i = 1; i <= 8; ++i) {
    const double t = T * i / 8;
    const auto ref = oracle::rk4(f, {2.0 * H + 1.0, 0.0, 0.0}, 0.0, t, 4000);
    worst = std::max(worst, std::abs(sol.component(t, 0) - ref[0]));
    worst = std::max(worst, std::abs(p.base(t) - ref[0]));
    worst = std::max(worst, std::abs(p.height(t) - ref[1]));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("the ordinate cos(omega t) + 2H does not solve the parabolic system") {
  const double H = 1.0, w = std::sqrt(3.0);
  const oracle::Rhs f = [H](double, const std::vector<double>& y) {
    return std::vector<double>{y[0] * std::sin(y[2]), std::cos(y[2]), -2.0 * H - std::cos(y[2])};
  };
  const double t = 0.8;
  const auto ref = oracle::rk4(f, {2.0 * H + 1.0, 0.0, 0.0}, 0.0, t, 4000);
  CHECK(std::abs(ref[0] - (std::cos(w * t) + 2.0 * H)) > 0.1);
}

TEST_CASE("tanh-sinh quadrature with endpoint singularities") {
  // (1 - x)(1 + x) from the distances to the ends.
  const double v = quad_singular(
      [](double, double, double to_b) { return 1.0 / std::sqrt(to_b * (2.0 - to_b)); }, 0.0,
      1.0, 1e-13);
  CHECK(std::abs(v - pi / 2) < 1e-12);
  CHECK(std::abs(quad_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12) - 2.0) <
        1e-11);
  CHECK(std::abs(quad_singular([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12) + 1.0) < 1e-11);
  const QuadResult r = quad_singular_detailed(
      [](double x, double, double) { return std::exp(x); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-13);
  CHECK(r.levels >= 3);
}

TEST_CASE("quadrature non-convergence is an accuracy error") {
  CHECK_THROWS_AS(quad_singular([](double x) { return std::sin(2e4 * x); }, 0.0, 1.0, 1e-14),
                  AccuracyError);
}

TEST_CASE("first-integral quadrature for the S2 sphere matches the closed form") {
  const double H = 1.0;
  const ProfileCurve p = make_profile({FamilyTag::RotSphereS2xR, H, 0.0});
  const double k = std::sqrt(1.0 + 4.0 * H * H);
  CHECK(std::abs(p.height(0.0) - 4.0 * H / k * std::atanh(1.0 / k)) < 1e-12);
}

TEST_CASE("energy quadrature at zero energy matches the cylinder") {
  const double H = 1.0;
  const ProfileCurve g = make_profile({FamilyTag::HypGeneralH2xR, H, 0.0});
  const double closed = pi / (3.0 * std::sqrt(3.0));
  CHECK(std::abs(g.height(0.0) - g.height(g.domain().lo) - closed) < 1e-9);
}

TEST_CASE("root bracketing and golden section") {
  CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSolutionError);
  const Extremum e = golden_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0, 2.0);
  CHECK(std::abs(e.x - 0.3) < 1e-8);
  // Maximum at the end of the bracket.
  CHECK(std::abs(golden_maximize([](double x) { return x; }, 0.0, 1.0).x - 1.0) < 1e-8);
}
