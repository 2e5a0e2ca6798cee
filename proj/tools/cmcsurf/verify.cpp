#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "cmc/estimates.hpp"
#include "cmc/geomcheck.hpp"
#include "cmc/invariant_odes.hpp"

namespace cmc::cli {

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::AbsDiff: return "abs_diff_le";
    case Relation::AtMost: return "le";
    case Relation::AtLeast: return "ge";
    case Relation::Above: return "gt";
  }
  return "unknown";
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

nlohmann::ordered_json VerifyReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  double total = 0.0;
  nlohmann::ordered_json per_check = nlohmann::ordered_json::object();
  for (const CheckRecord& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"tolerance", c.tolerance},
                           {"relation", to_string(c.relation)},
                           {"pass", c.pass}});
    per_check[c.name] = c.seconds;
    total += c.seconds;
  }
  j["pass"] = pass();
  if (with_timing) j["timing"] = {{"total_seconds", total}, {"checks", per_check}};
  return j;
}

namespace {

bool holds(Relation r, double actual, double expected, double tol) {
  if (!std::isfinite(actual)) return false;
  switch (r) {
    case Relation::AbsDiff: return std::abs(actual - expected) <= tol;
    case Relation::AtMost: return actual <= expected + tol;
    case Relation::AtLeast: return actual >= expected - tol;
    case Relation::Above: return actual > expected;
  }
  return false;
}

class Suite {
 public:
  explicit Suite(std::optional<double> tol) : override_(tol) {}

  void check(std::string name, double expected, double tol, Relation rel,
             const std::function<double()>& measure) {
    const auto t0 = std::chrono::steady_clock::now();
    const double actual = measure();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double used = override_.value_or(tol);
    report_.checks.push_back(
        {std::move(name), expected, actual, used, rel, holds(rel, actual, expected, used), seconds});
  }

  VerifyReport take() { return std::move(report_); }

 private:
  std::optional<double> override_;
  VerifyReport report_;
};

}  // namespace

VerifyReport verify_profile(const ProfileCurve& p, std::optional<double> tolerance) {
  Suite s(tolerance);
  const double H = p.family().H;
  const double c = p.space().curvature();
  const EstimateParams est{c, H, 0.0, {}};

  s.check("cmc_residual", 0.0, 1e-6, Relation::AtMost,
          [&] { return mean_curvature_residual(p, 64); });

  if (p.is_bigraph()) {
    const double top = max_height(p);
    s.check("max_height", top, 1e-9, Relation::AbsDiff,
            [&] { return p.chart(p.chart_top()).height; });
    if (p.height_class() == HeightClass::HalfSphere)
      s.check("half_height_ratio", 0.5, 1e-10, Relation::AbsDiff,
              [&] { return p.chart(p.chart_top()).height / alpha_max(est); });
    s.check("top_angle", -1.0, 1e-6, Relation::AbsDiff, [&] { return angle_at_top(p); });

    // The general rotational chart stops short of the slice.
    if (!p.boundary_chart_params().empty()) {
      const double kappa = boundary_kappa(p);
      const std::vector<double> measured = measured_boundary_kappas(p);
      for (std::size_t i = 0; i < measured.size(); ++i)
        s.check("boundary_kappa_" + std::to_string(i), kappa, 1e-6, Relation::AbsDiff,
                [&] { return measured[i]; });
      s.check("boundary_angle", 0.0, 1e-6, Relation::AbsDiff,
              [&] { return angle_at_boundary(p); });
      if (p.height_class() == HeightClass::Sphere)
        s.check("distance_sharpness", distance_lower_bound(est, top), 1e-6, Relation::AbsDiff,
                [&] { return meridian_length(p); });
    }

    const ProfileSweep sweep = sweep_profile(p, 128);
    const double alpha = alpha_max(est);
    s.check("zeta_pointwise", 0.0, 1e-6, Relation::AtLeast, [&] {
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < sweep.tau.size(); ++i) {
        const double h = std::clamp(sweep.height[i], 0.0, alpha);
        worst = std::min(worst, sweep.nu[i] * sweep.nu[i] - zeta(est, h));
      }
      return worst;
    });
    s.check("unit_slope", 1.0, 1e-8, Relation::AtMost, [&] {
      double worst = 0.0;
      for (std::size_t i = 0; i < sweep.tau.size(); ++i)
        worst = std::max(worst, sweep.nu[i] * sweep.nu[i] +
                                    sweep.height_slope[i] * sweep.height_slope[i]);
      return worst;
    });
  }

  if (const auto ode = ode_cross_check(p)) {
    s.check("ode_vs_profile", 0.0, 1e-8, Relation::AtMost, [&] { return ode->sup_deviation; });
    if (p.orbit_kind() == OrbitKind::HyperbolicTranslation)
      s.check("energy_drift", 0.0, 1e-9, Relation::AtMost, [&] { return ode->invariant_drift; });
    if (p.is_bigraph() && ode->top_reached)
      s.check("ode_max_height", max_height(p), 1e-8, Relation::AbsDiff,
              [&] { return ode->ode_max_height; });
  }

  const bool sphere = p.is_bigraph() && p.height_class() == HeightClass::Sphere;
  if (sphere) {
    s.check("density_vanishes", 0.0, 1e-6, Relation::AtMost,
            [&] { return density_stats(p).max_abs_q; });
  } else {
    s.check("density_orbit_variation", 0.0, 1e-8, Relation::AtMost,
            [&] { return density_stats(p, 32, 8, 1e-2).orbit_variation; });
  }

  if (!p.is_bigraph()) {
    s.check("height_drift", 0.0, 0.0, Relation::Above, [&] {
      if (p.family().tag == FamilyTag::ParabolicH2xR) return parabolic_obstruction(H);
      return std::abs(p.height(p.domain().hi) - p.height(p.domain().lo));
    });
  }
  return s.take();
}

}  // namespace cmc::cli
