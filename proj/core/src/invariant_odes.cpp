#include "cmc/invariant_odes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cmc/error.hpp"

namespace cmc {

using std::numbers::pi;

OdeSystem hyperbolic_translation_system(double H) {
  OdeSystem s;
  s.dimension = 3;
  s.rhs = [H](double, std::span<const double> y, std::span<double> d) {
    const double x = y[1], a = y[2];
    const double q = std::sqrt(1.0 + x * x);
    d[0] = std::cos(a);
    d[1] = q * std::sin(a);
    d[2] = 2.0 * H + x * std::cos(a) / q;
  };
  s.invariant = [H](std::span<const double> y) { return hyperbolic_energy(H, y[1], y[2]); };
  return s;
}

double hyperbolic_energy(double H, double x, double alpha) {
  return -2.0 * H * x - std::sqrt(1.0 + x * x) * std::cos(alpha);
}

OdeSystem parabolic_translation_system(double H) {
  OdeSystem s;
  s.dimension = 3;
  s.rhs = [H](double, std::span<const double> y, std::span<double> d) {
    d[0] = y[0] * std::sin(y[2]);
    d[1] = std::cos(y[2]);
    d[2] = -2.0 * H - std::cos(y[2]);
  };
  return s;
}

OdeSystem rotational_system(double c, double H) {
  OdeSystem s;
  s.dimension = 2;
  s.rhs = [c, H](double r, std::span<const double> y, std::span<double> d) {
    double warp;  // f'/f
    if (c > 0.0) {
      const double R = 1.0 / std::sqrt(c);
      warp = 1.0 / (R * std::tan(r / R));
    } else if (c < 0.0) {
      const double R = 1.0 / std::sqrt(-c);
      warp = 1.0 / (R * std::tanh(r / R));
    } else {
      warp = 1.0 / r;
    }
    const double sg = y[1];
    d[0] = std::cos(sg) / std::sin(sg);
    d[1] = (2.0 * H + warp * std::cos(sg)) / std::sin(sg);
  };
  return s;
}

OdeSystem rotational_arclength_system(double c, double H) {
  OdeSystem s;
  s.dimension = 3;
  s.rhs = [c, H](double, std::span<const double> y, std::span<double> d) {
    const double r = y[0], th = y[2];
    const double st = std::sin(th);
    double bend = 0.0;  // (f'/f)(r) sin theta, with its limit on the axis
    if (r != 0.0) {
      if (c > 0.0) {
        const double R = 1.0 / std::sqrt(c);
        bend = st / (R * std::tan(r / R));
      } else if (c < 0.0) {
        const double R = 1.0 / std::sqrt(-c);
        bend = st / (R * std::tanh(r / R));
      } else {
        bend = st / r;
      }
    } else {
      bend = H;
    }
    d[0] = std::cos(th);
    d[1] = st;
    d[2] = 2.0 * H - bend;
  };
  return s;
}

double rotational_top_height(double c, double H, double r_boundary, double rtol, double atol) {
  constexpr double kAxisGap = 1e-3;
  if (!(H > 0.0)) throw InvalidInputError("mean curvature H must be positive");
  if (!(r_boundary > 0.0) || (c > 0.0 && !(r_boundary < pi / std::sqrt(c))))
    throw InvalidInputError("boundary radius out of range");
  const OdeSystem sys = rotational_arclength_system(c, H);
  const double base_chunk = std::min(0.05, 0.05 / H);
  State y{r_boundary, 0.0, 0.5 * pi};
  double s = 0.0;
  for (int it = 0; it < 100000; ++it) {
    // |r'| <= 1, so this chunk cannot carry r below kAxisGap / 2.
    const double chunk = std::min(base_chunk, y[0] - 0.5 * kAxisGap);
    const OdeSolution sol = integrate_ivp(sys, y, {s, s + chunk}, rtol, atol);
    const State end = sol(s + chunk);
    // The axis is a regular singular point: stop at r = delta and add the
    // umbilic correction H delta^2 / 2 (the error is O(delta^4)).
    if (end[0] <= kAxisGap) {
      const double at = bisect_root([&](double t) { return sol.component(t, 0) - kAxisGap; },
                                    s, s + chunk, 1e-14);
      return sol.component(at, 1) + 0.5 * H * kAxisGap * kAxisGap;
    }
    if (end[2] >= pi) {
      const double top = bisect_root([&](double t) { return sol.component(t, 2) - pi; }, s,
                                     s + chunk, 1e-14);
      return sol.component(top, 1);
    }
    if (!(end[1] > -1e-9)) throw NoSolutionError("rotational profile returned to the slice");
    y = end;
    s += chunk;
  }
  throw AccuracyError("rotational profile did not turn horizontal");
}

namespace {

double refine_max(const std::function<double(double)>& h, double lo, double hi, int samples) {
  double best_t = lo, best = h(lo);
  const double dt = (hi - lo) / samples;
  for (int i = 1; i <= samples; ++i) {
    const double t = lo + i * dt;
    const double v = h(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  const double a = std::max(lo, best_t - dt), b = std::min(hi, best_t + dt);
  if (b > a) best = std::max(best, golden_maximize(h, a, b, 1e-12).value);
  return best;
}

OdeCrossCheck hyperbolic_check(const ProfileCurve& p, double rtol, double atol) {
  const double H = p.family().H;
  const double w = std::sqrt(4.0 * H * H - 1.0);
  // The cylinder is parametrized by r = w t, the general profile by t.
  const double scale = p.family().tag == FamilyTag::HypCylinderH2xR ? w : 1.0;
  const Interval d = p.domain();
  const double t0 = d.lo / scale, t1 = d.hi / scale;
  const double E = p.family().tag == FamilyTag::HypCylinderH2xR ? 0.0 : p.family().aux;
  const double x0 = p.base(d.lo);
  const double cos_a = -(E + 2.0 * H * x0) / std::sqrt(1.0 + x0 * x0);
  const State y0{0.0, x0, cos_a >= 0.0 ? 0.0 : pi};
  const OdeSolution sol = integrate_ivp(hyperbolic_translation_system(H), y0, {t0, t1}, rtol, atol);

  OdeCrossCheck out;
  out.invariant_drift = sol.max_invariant_drift();
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + (t1 - t0) * i / n;
    const double param = std::clamp(t * scale, d.lo, d.hi);
    out.sup_deviation = std::max({out.sup_deviation,
                                  std::abs(sol.component(t, 0) - p.height(param)),
                                  std::abs(sol.component(t, 1) - p.base(param))});
  }
  out.ode_max_height = refine_max([&](double t) { return sol.component(t, 0); }, t0, t1, n);
  out.top_reached = true;
  out.ode_span_height = sol.component(t1, 0) - sol.component(t0, 0);
  return out;
}

OdeCrossCheck parabolic_check(const ProfileCurve& p, double rtol, double atol) {
  const double H = p.family().H;
  const Interval d = p.domain();
  const State y0{2.0 * H + 1.0, 0.0, 0.0};
  const OdeSolution sol = integrate_ivp(parabolic_translation_system(H), y0, {d.lo, d.hi}, rtol, atol);
  OdeCrossCheck out;
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const double t = d.lo + d.length() * i / n;
    out.sup_deviation = std::max({out.sup_deviation,
                                  std::abs(sol.component(t, 0) - p.base(t)),
                                  std::abs(sol.component(t, 1) - p.height(t)),
                                  std::abs(sol.component(t, 2) - parabolic_alpha(H, t))});
  }
  out.ode_max_height = refine_max([&](double t) { return sol.component(t, 1); }, d.lo, d.hi, n);
  out.top_reached = true;
  out.ode_span_height = sol.component(d.hi, 1) - sol.component(d.lo, 1);
  return out;
}

OdeCrossCheck rotational_check(const ProfileCurve& p, double rtol, double atol) {
  const double H = p.family().H;
  const double c = p.space().curvature();
  std::function<double(double)> cos_sigma;
  std::vector<double> poles;
  switch (p.family().tag) {
    case FamilyTag::RotSphereH2xR:
      cos_sigma = [H](double r) { return -2.0 * H * std::tanh(0.5 * r); };
      poles = {0.0};
      break;
    case FamilyTag::EuclSphere:
      cos_sigma = [H](double r) { return -H * r; };
      poles = {0.0};
      break;
    default: {
      const double c0 = p.family().tag == FamilyTag::RotSphereS2xR  ? -1.0
                        : p.family().tag == FamilyTag::RotTorusS2xR ? 0.0
                                                                    : p.family().aux;
      cos_sigma = [H, c0](double r) {
        if (c0 == -1.0) return -2.0 * H * std::tan(0.5 * r);
        if (c0 == 1.0) return 2.0 * H / std::tan(0.5 * r);
        return 2.0 * H * (c0 + std::cos(r)) / std::sin(r);
      };
      poles = {0.0, pi};
    }
  }
  auto sigma = [&](double r) { return std::acos(std::clamp(cos_sigma(r), -1.0, 1.0)); };

  // Stay 1e-6 inside the vertical points and away from the rotation axis,
  // where the r-parametrized system is singular.
  const Interval d = p.domain();
  const double buffer = 1e-6;
  const double gap = 0.02 * d.length();
  std::vector<Interval> pieces{{d.lo + buffer, d.hi - buffer}};
  for (double pole : poles) {
    std::vector<Interval> next;
    for (const Interval& piece : pieces) {
      if (pole - gap > piece.lo && pole - gap < piece.hi) next.push_back({piece.lo, pole - gap});
      if (pole + gap < piece.hi && pole + gap > piece.lo) next.push_back({pole + gap, piece.hi});
      if (pole + gap <= piece.lo || pole - gap >= piece.hi) next.push_back(piece);
    }
    pieces = next;
  }

  OdeCrossCheck out;
  out.ode_max_height = -1e300;
  const OdeSystem sys = rotational_system(c, H);
  for (const Interval& piece : pieces) {
    const double m = piece.mid();
    const State y0{p.height(m), sigma(m)};
    for (double end : {piece.hi, piece.lo}) {
      const OdeSolution sol = integrate_ivp(sys, y0, {m, end}, rtol, atol);
      const int n = 100;
      for (int i = 0; i <= n; ++i) {
        const double r = m + (end - m) * i / n;
        const double hv = sol.component(r, 0);
        out.sup_deviation = std::max({out.sup_deviation, std::abs(hv - p.height(r)),
                                      std::abs(sol.component(r, 1) - sigma(r))});
        out.ode_max_height = std::max(out.ode_max_height, hv);
      }
    }
  }
  out.ode_span_height = p.height(d.hi) - p.height(d.lo);
  // The r-parametrized pieces stop short of the axis; the top comes from the
  // arc-length form instead.
  if (p.is_bigraph()) {
    const double rb = p.boundary_params().back();
    if (rb > 0.0 && (c <= 0.0 || rb < pi / std::sqrt(c))) {
      out.ode_max_height = rotational_top_height(c, H, rb, rtol, atol);
      out.top_reached = true;
    }
  }
  return out;
}

}  // namespace

std::optional<OdeCrossCheck> ode_cross_check(const ProfileCurve& p, double rtol, double atol) {
  switch (p.family().tag) {
    case FamilyTag::HypCylinderH2xR:
    case FamilyTag::HypGeneralH2xR:
      return hyperbolic_check(p, rtol, atol);
    case FamilyTag::ParabolicH2xR:
      return parabolic_check(p, rtol, atol);
    case FamilyTag::RotSphereH2xR:
    case FamilyTag::RotSphereS2xR:
    case FamilyTag::RotTorusS2xR:
    case FamilyTag::RotGeneralS2xR:
    case FamilyTag::EuclSphere:
      return rotational_check(p, rtol, atol);
    case FamilyTag::EuclCylinder:
      break;
  }
  return std::nullopt;
}

}  // namespace cmc
