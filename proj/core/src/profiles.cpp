#include "cmc/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmc/error.hpp"
#include "cmc/estimates.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

using std::numbers::pi;

const char* to_string(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::RotSphereH2xR: return "RotSphereH2xR";
    case FamilyTag::RotSphereS2xR: return "RotSphereS2xR";
    case FamilyTag::RotTorusS2xR: return "RotTorusS2xR";
    case FamilyTag::RotGeneralS2xR: return "RotGeneralS2xR";
    case FamilyTag::HypCylinderH2xR: return "HypCylinderH2xR";
    case FamilyTag::HypGeneralH2xR: return "HypGeneralH2xR";
    case FamilyTag::ParabolicH2xR: return "ParabolicH2xR";
    case FamilyTag::EuclSphere: return "EuclSphere";
    case FamilyTag::EuclCylinder: return "EuclCylinder";
  }
  return "unknown";
}

namespace {

constexpr double kQuadTol = 1e-13;

double clamp_to(const Interval& d, double x, const char* what) {
  const double slack = 1e-12 * std::max(1.0, d.length());
  if (!(x >= d.lo - slack && x <= d.hi + slack)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " parameter " << x << " outside [" << d.lo << ", " << d.hi << "]";
    throw DomainError(os.str());
  }
  return std::clamp(x, d.lo, d.hi);
}

double omega_of(double H) { return std::sqrt(4.0 * H * H - 1.0); }

// 1 - |phi| for the c0 = -1 profile, phi(s) = -2H tan(s/2), at distance d
// from the end of the domain where |phi| = 1.
double sphere_gap(double H, double d) {
  const double sh = std::sin(0.5 * d), ch = std::cos(0.5 * d);
  return sh * (2.0 * H + 1.0 / (2.0 * H)) / (ch + sh / (2.0 * H));
}

// First-integral slope phi(s) = 2H (c0 + cos s) csc s of the rotational
// profiles in S^2 x R; sigma = arccos(phi).
double rot_phi(double H, double c0, double s) {
  // Half-angle forms stay finite through the removable 0/0 at the poles.
  if (c0 == -1.0) return -2.0 * H * std::tan(0.5 * s);
  if (c0 == 1.0) return 2.0 * H / std::tan(0.5 * s);
  return 2.0 * H * (c0 + std::cos(s)) / std::sin(s);
}

// phi(e) - phi(e + d) without cancellation for small d.
double rot_phi_drop(double H, double c0, double e, double d) {
  const double s = e + d;
  if (c0 == -1.0) return 2.0 * H * std::sin(0.5 * d) / (std::cos(0.5 * e) * std::cos(0.5 * s));
  if (c0 == 1.0) return 2.0 * H * std::sin(0.5 * d) / (std::sin(0.5 * e) * std::sin(0.5 * s));
  return 4.0 * H * std::sin(0.5 * d) * (c0 * std::cos(e + 0.5 * d) + std::cos(0.5 * d)) /
         (std::sin(e) * std::sin(s));
}

// 1 - phi(e + d)^2 where e is an end of the domain, taken as the exact
// point where |phi| = 1.
double rot_one_minus_phi_sq(double H, double c0, double e, double d) {
  const double pe = rot_phi(H, c0, e);
  const double sg = pe >= 0.0 ? 1.0 : -1.0;
  const double near = sg * rot_phi_drop(H, c0, e, d);
  const double far = 1.0 + sg * rot_phi(H, c0, e + d);
  return std::max(0.0, near * far);
}

// Last point from `inside` towards `outside` where |phi| <= 1, to the
// resolution of doubles.
double rot_domain_end(double H, double c0, double inside, double outside) {
  auto ok = [&](double s) { return std::abs(rot_phi(H, c0, s)) <= 1.0; };
  double a = inside, b = outside;
  for (int it = 0; it < 2000; ++it) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    (ok(m) ? a : b) = m;
  }
  return a;
}

}  // namespace

double ProfileCurve::height(double param) const {
  return height_fn_(clamp_to(domain_, param, "profile"));
}

double ProfileCurve::base(double param) const {
  return base_fn_(clamp_to(domain_, param, "profile"));
}

double ProfileCurve::base_arclength(double param) const {
  return arclength_fn_(clamp_to(domain_, param, "profile"));
}

double ProfileCurve::base_arclength_of(double b) const {
  if (!std::isfinite(b)) throw InvalidInputError("non-finite base value");
  switch (orbit_) {
    case OrbitKind::Rotation:
    case OrbitKind::EuclideanTranslation:
      return b;
    case OrbitKind::HyperbolicTranslation:
      return std::asinh(b);
    case OrbitKind::ParabolicTranslation:
      if (!(b > 0.0)) throw DomainError("half-plane ordinate must be positive");
      return std::log(b);
  }
  return b;
}

ChartPoint ProfileCurve::chart(double tau) const {
  if (!std::isfinite(tau)) throw InvalidInputError("non-finite chart parameter");
  return chart_fn_(tau);
}

double ProfileCurve::chart_param_of(double param) const {
  return chart_of_fn_(clamp_to(domain_, param, "profile"));
}

Interval ProfileCurve::orbit_range() const {
  if (orbit_ == OrbitKind::Rotation) return {0.0, 2.0 * pi};
  return {-1.0, 1.0};
}

AmbientPoint ProfileCurve::place(double base, double orbit, double height) const {
  switch (orbit_) {
    case OrbitKind::Rotation:
      return space_.polar_point(base, orbit, height);
    case OrbitKind::HyperbolicTranslation: {
      const double e = std::exp(orbit);
      return space_.halfplane_point(base * e, e, height);
    }
    case OrbitKind::ParabolicTranslation:
      return space_.halfplane_point(orbit, base, height);
    case OrbitKind::EuclideanTranslation:
      return space_.plane_point(base, orbit, height);
  }
  return {};
}

ProfileCurve make_profile(const ProfileFamily& f) {
  const double H = f.H;
  if (!std::isfinite(H) || !std::isfinite(f.aux))
    throw InvalidInputError("profile parameters must be finite");
  if (!(H > 0.0)) throw InvalidInputError("mean curvature H must be positive");

  auto need_hyperbolic_range = [&] {
    if (!(H > 0.5)) throw InvalidInputError("family needs H > 1/2");
  };
  auto identity = [](double x) { return x; };

  switch (f.tag) {
    case FamilyTag::RotSphereH2xR: {
      need_hyperbolic_range();
      ProfileCurve p(f, -1.0);
      const double w = omega_of(H);
      const double rb = 2.0 * std::asinh(1.0 / w);
      p.orbit_ = OrbitKind::Rotation;
      p.height_class_ = HeightClass::Sphere;
      p.bigraph_ = true;
      p.domain_ = {0.0, rb};
      p.height_fn_ = [H, w](double r) {
        const double sh = std::sinh(0.5 * r);
        const double arg = (1.0 - w * w * sh * sh) / (4.0 * H * H);
        return 4.0 * H / w * std::asin(std::sqrt(std::clamp(arg, 0.0, 1.0)));
      };
      p.base_fn_ = identity;
      p.arclength_fn_ = identity;
      p.chart_domain_ = {0.5 * pi, pi};
      p.chart_fn_ = [H, w](double s) {
        return ChartPoint{-2.0 * std::atanh(std::cos(s) / (2.0 * H)),
                          4.0 * H / w * std::atan(std::sin(s) / w)};
      };
      p.chart_of_fn_ = [H](double r) {
        return std::acos(std::clamp(-2.0 * H * std::tanh(0.5 * r), -1.0, 1.0));
      };
      p.boundary_ = {rb};
      p.chart_boundary_ = {pi};
      p.chart_top_ = 0.5 * pi;
      p.interior_ = 0.0;
      return p;
    }

    case FamilyTag::RotSphereS2xR: {
      ProfileCurve p(f, 1.0);
      const double b = 2.0 * std::atan(1.0 / (2.0 * H));
      const double k = std::sqrt(1.0 + 4.0 * H * H);
      p.orbit_ = OrbitKind::Rotation;
      p.height_class_ = HeightClass::Sphere;
      p.bigraph_ = true;
      p.domain_ = {-b, b};
      // Quadrature of the first-integral formula, with both factors of
      // 1 - phi^2 taken from the distances to the ends of the domain.
      p.height_fn_ = [H, b](double r) {
        if (r <= -b) return 0.0;
        const double top_gap = b - r;
        auto integrand = [H, top_gap](double s, double from_a, double to_r) {
          const double phi = -2.0 * H * std::tan(0.5 * s);
          const double w = sphere_gap(H, from_a) * sphere_gap(H, top_gap + to_r);
          return phi / std::sqrt(w);
        };
        return quad_singular(integrand, -b, r, kQuadTol);
      };
      p.base_fn_ = identity;
      p.arclength_fn_ = identity;
      p.chart_domain_ = {0.0, pi};
      p.chart_fn_ = [H, k](double s) {
        return ChartPoint{-2.0 * std::atan(std::cos(s) / (2.0 * H)),
                          4.0 * H / k * std::atanh(std::sin(s) / k)};
      };
      p.chart_of_fn_ = [H](double r) {
        return std::acos(std::clamp(-2.0 * H * std::tan(0.5 * r), -1.0, 1.0));
      };
      p.boundary_ = {-b, b};
      p.chart_boundary_ = {0.0, pi};
      p.chart_top_ = 0.5 * pi;
      p.interior_ = 0.0;
      return p;
    }

    case FamilyTag::RotTorusS2xR: {
      ProfileCurve p(f, 1.0);
      const double th = std::atan(1.0 / (2.0 * H));
      const double k = std::sqrt(1.0 + 4.0 * H * H);
      p.orbit_ = OrbitKind::Rotation;
      p.height_class_ = HeightClass::HalfSphere;
      p.bigraph_ = true;
      p.domain_ = {0.5 * pi - th, 0.5 * pi + th};
      p.height_fn_ = [H, k](double r) {
        const double arg = std::max(1.0, k / (2.0 * H) * std::sin(r));
        return 2.0 * H / k * std::acosh(arg);
      };
      p.base_fn_ = identity;
      p.arclength_fn_ = identity;
      p.chart_domain_ = {0.0, pi};
      p.chart_fn_ = [H, k](double s) {
        return ChartPoint{0.5 * pi - std::atan(std::cos(s) / (2.0 * H)),
                          2.0 * H / k * std::atanh(std::sin(s) / k)};
      };
      p.chart_of_fn_ = [H](double r) {
        return std::acos(std::clamp(2.0 * H * std::cos(r) / std::sin(r), -1.0, 1.0));
      };
      p.boundary_ = {p.domain_.lo, p.domain_.hi};
      p.chart_boundary_ = {0.0, pi};
      p.chart_top_ = 0.5 * pi;
      p.interior_ = 0.5 * pi;
      return p;
    }

    case FamilyTag::RotGeneralS2xR: {
      ProfileCurve p(f, 1.0);
      // The natural parameter is regular away from the vertical points, so
      // the chart is the natural parameter on a slightly shrunk domain.
      const double c0 = f.aux;
      double seed;
      if (c0 == -1.0) {
        seed = 0.0;
      } else if (c0 == 1.0) {
        seed = pi;
      } else if (std::abs(c0) < 1.0) {
        seed = std::acos(-c0);
      } else {
        seed = std::acos(-1.0 / c0);
        if (!(2.0 * H * std::sqrt(c0 * c0 - 1.0) < 1.0)) {
          std::ostringstream os;
          os << "no rotational profile with first integral " << c0 << " at H = " << H;
          throw NoSolutionError(os.str());
        }
      }
      // phi is singular at the poles, so the search brackets stop short of them.
      double lo_limit = seed - pi, hi_limit = seed + pi;
      if (c0 != -1.0 && c0 != 1.0) {
        lo_limit = 0.0;
        hi_limit = pi;
      }
      const double a = rot_domain_end(H, c0, seed, lo_limit);
      const double b = rot_domain_end(H, c0, seed, hi_limit);
      if (!(b > a)) throw NoSolutionError("rotational profile domain is empty");
      p.orbit_ = OrbitKind::Rotation;
      p.domain_ = {a, b};
      p.height_fn_ = [H, c0, a, b](double r) {
        if (r <= a) return 0.0;
        const double r_gap = b - r;
        auto integrand = [H, c0, a, b, r_gap](double s, double from_a, double to_r) {
          const double to_b = to_r + r_gap;
          const double w = from_a <= to_b ? rot_one_minus_phi_sq(H, c0, a, from_a)
                                          : rot_one_minus_phi_sq(H, c0, b, -to_b);
          return rot_phi(H, c0, s) / std::sqrt(w);
        };
        return quad_singular(integrand, a, r, kQuadTol);
      };
      p.base_fn_ = identity;
      p.arclength_fn_ = identity;
      const double margin = 0.05 * (b - a);
      p.chart_domain_ = {a + margin, b - margin};
      const auto hf = p.height_fn_;
      p.chart_fn_ = [hf](double r) { return ChartPoint{r, hf(r)}; };
      p.chart_of_fn_ = identity;
      const double end_height = p.height_fn_(b);
      const Extremum top = golden_maximize(p.height_fn_, a, b, 1e-9);
      p.bigraph_ = std::abs(end_height) <= 1e-7 * std::max(1.0, std::abs(top.value));
      if (p.bigraph_) {
        const bool through_axis = (a < 0.0 && b > 0.0) || (a < pi && b > pi);
        p.height_class_ = through_axis ? HeightClass::Sphere : HeightClass::HalfSphere;
        p.boundary_ = {a, b};
      }
      p.chart_top_ = top.x;
      p.interior_ = 0.5 * (a + b);
      return p;
    }

    case FamilyTag::HypCylinderH2xR: {
      need_hyperbolic_range();
      ProfileCurve p(f, -1.0);
      const double w = omega_of(H);
      p.orbit_ = OrbitKind::HyperbolicTranslation;
      p.height_class_ = HeightClass::HalfSphere;
      p.bigraph_ = true;
      p.domain_ = {-0.5 * pi, 0.5 * pi};
      p.height_fn_ = [H, w](double r) {
        const double s = std::sin(r);
        return 2.0 * H / w * std::atan(std::cos(r) / std::sqrt(w * w + s * s));
      };
      p.base_fn_ = [w](double r) { return std::sin(r) / w; };
      p.arclength_fn_ = [w](double r) { return std::asinh(std::sin(r) / w); };
      p.chart_domain_ = p.domain_;
      const auto hf = p.height_fn_, bf = p.base_fn_;
      p.chart_fn_ = [hf, bf](double r) { return ChartPoint{bf(r), hf(r)}; };
      p.chart_of_fn_ = identity;
      p.boundary_ = {-0.5 * pi, 0.5 * pi};
      p.chart_boundary_ = p.boundary_;
      p.chart_top_ = 0.0;
      p.interior_ = 0.0;
      return p;
    }

    case FamilyTag::HypGeneralH2xR: {
      need_hyperbolic_range();
      ProfileCurve p(f, -1.0);
      const double E = f.aux;
      const double w = omega_of(H);
      const double S = std::sqrt(4.0 * H * H + E * E - 1.0);
      auto xdot = [S, w](double t) { return S / w * std::cos(w * t); };
      const double a = bisect_root(xdot, -pi / w, 0.0, 1e-14);
      const double b = bisect_root(xdot, 0.0, pi / w, 1e-14);
      p.orbit_ = OrbitKind::HyperbolicTranslation;
      p.bigraph_ = (E == 0.0);
      p.height_class_ = p.bigraph_ ? HeightClass::HalfSphere : HeightClass::None;
      p.domain_ = {a, b};
      // x and h' = cos(alpha) recomputed from the energy: x'^2 = 1 - E^2 - 4HEx
      // - omega^2 x^2 centres x at -2HE/omega^2.
      p.base_fn_ = [H, E, S, w](double t) { return (S * std::sin(w * t) - 2.0 * H * E) / (w * w); };
      p.height_fn_ = [H, E, S, w, a](double t) {
        auto integrand = [H, E, S, w](double s) {
          const double sn = std::sin(s * w);
          const double q = S * sn - 2.0 * H * E;
          return (E - 2.0 * H * S * sn) / std::sqrt(w * w * w * w + q * q);
        };
        return quad_singular(integrand, a, t, kQuadTol);
      };
      const auto bf = p.base_fn_;
      p.arclength_fn_ = [bf](double t) { return std::asinh(bf(t)); };
      p.chart_domain_ = p.domain_;
      const auto hf = p.height_fn_;
      p.chart_fn_ = [hf, bf](double t) { return ChartPoint{bf(t), hf(t)}; };
      p.chart_of_fn_ = identity;
      if (p.bigraph_) p.boundary_ = p.chart_boundary_ = {a, b};
      p.chart_top_ = 0.0;
      p.interior_ = 0.5 * (a + b);
      return p;
    }

    case FamilyTag::ParabolicH2xR: {
      need_hyperbolic_range();
      ProfileCurve p(f, -1.0);
      const double w = omega_of(H);
      p.orbit_ = OrbitKind::ParabolicTranslation;
      p.height_class_ = HeightClass::None;
      p.bigraph_ = false;
      p.domain_ = {0.0, 2.0 * pi / w};
      p.height_fn_ = [H](double t) { return -(parabolic_alpha(H, t) + 2.0 * H * t); };
      p.base_fn_ = [H](double t) { return 2.0 * H + std::cos(parabolic_alpha(H, t)); };
      const auto bf = p.base_fn_;
      p.arclength_fn_ = [bf](double t) { return std::log(bf(t)); };
      p.chart_domain_ = p.domain_;
      const auto hf = p.height_fn_;
      p.chart_fn_ = [hf, bf](double t) { return ChartPoint{bf(t), hf(t)}; };
      p.chart_of_fn_ = identity;
      p.chart_top_ = 0.0;
      p.interior_ = 0.0;
      return p;
    }

    case FamilyTag::EuclSphere: {
      ProfileCurve p(f, 0.0);
      const double R = 1.0 / H;
      p.orbit_ = OrbitKind::Rotation;
      p.height_class_ = HeightClass::Sphere;
      p.bigraph_ = true;
      p.domain_ = {-R, R};
      p.height_fn_ = [R](double rho) { return std::sqrt(std::max(0.0, (R - rho) * (R + rho))); };
      p.base_fn_ = identity;
      p.arclength_fn_ = identity;
      p.chart_domain_ = {-0.5 * pi, 0.5 * pi};
      p.chart_fn_ = [R](double phi) { return ChartPoint{R * std::sin(phi), R * std::cos(phi)}; };
      p.chart_of_fn_ = [H](double rho) { return std::asin(std::clamp(H * rho, -1.0, 1.0)); };
      p.boundary_ = {-R, R};
      p.chart_boundary_ = {-0.5 * pi, 0.5 * pi};
      p.chart_top_ = 0.0;
      p.interior_ = 0.0;
      return p;
    }

    case FamilyTag::EuclCylinder: {
      ProfileCurve p(f, 0.0);
      const double R = 1.0 / (2.0 * H);
      p.orbit_ = OrbitKind::EuclideanTranslation;
      p.height_class_ = HeightClass::HalfSphere;
      p.bigraph_ = true;
      p.domain_ = {-R, R};
      p.height_fn_ = [R](double x) { return std::sqrt(std::max(0.0, (R - x) * (R + x))); };
      p.base_fn_ = identity;
      p.arclength_fn_ = identity;
      p.chart_domain_ = {-0.5 * pi, 0.5 * pi};
      p.chart_fn_ = [R](double phi) { return ChartPoint{R * std::sin(phi), R * std::cos(phi)}; };
      p.chart_of_fn_ = [R](double x) { return std::asin(std::clamp(x / R, -1.0, 1.0)); };
      p.boundary_ = {-R, R};
      p.chart_boundary_ = {-0.5 * pi, 0.5 * pi};
      p.chart_top_ = 0.0;
      p.interior_ = 0.0;
      return p;
    }
  }
  throw InvalidInputError("unknown family");
}

AmbientPoint sample_surface(const ProfileCurve& p, double param, double orbit) {
  if (!std::isfinite(orbit)) throw InvalidInputError("non-finite orbit parameter");
  return p.place(p.base(param), orbit, p.height(param));
}

AmbientPoint sample_chart(const ProfileCurve& p, double tau, double orbit) {
  if (!std::isfinite(orbit)) throw InvalidInputError("non-finite orbit parameter");
  const ChartPoint q = p.chart(tau);
  return p.place(q.base, orbit, q.height);
}

double max_height(const ProfileCurve& p) {
  const EstimateParams e{p.space().curvature(), p.family().H, 0.0, {}};
  switch (p.height_class()) {
    case HeightClass::Sphere: return alpha_max(e);
    case HeightClass::HalfSphere: return 0.5 * alpha_max(e);
    case HeightClass::None: break;
  }
  throw InvalidInputError(std::string(to_string(p.family().tag)) + " profile is not a bigraph");
}

double boundary_kappa(const ProfileCurve& p) {
  EstimateParams e{p.space().curvature(), p.family().H, 0.0, {}};
  switch (p.height_class()) {
    case HeightClass::Sphere: return kappa_lower_general(e);
    case HeightClass::HalfSphere:
      e.m = 0.5;
      return kappa_lower_height(e);
    case HeightClass::None: break;
  }
  throw InvalidInputError(std::string(to_string(p.family().tag)) + " profile is not a bigraph");
}

TorusArgmax torus_height_argmax(double xtol) {
  auto torus_top = [](double H) { return 0.5 * alpha_max({1.0, H, 0.0, {}}); };
  const Extremum best = golden_maximize(torus_top, 0.01, 5.0, xtol);
  return {best.x, best.value};
}

double parabolic_alpha(double H, double t) {
  if (!(H > 0.5)) throw InvalidInputError("parabolic profile needs H > 1/2");
  const double w = omega_of(H);
  const double k = (2.0 * H + 1.0) / w;
  // Unwrap the arctangent branches so that alpha is continuous. The atan2
  // form stays on the right branch where tan(reduced / 2) would overflow.
  const double phase = w * t;
  const double n = std::floor((phase + pi) / (2.0 * pi));
  const double half = 0.5 * (phase - 2.0 * pi * n);
  return -(2.0 * std::atan2(k * std::sin(half), std::cos(half)) + 2.0 * pi * n);
}

double parabolic_critical_param(double H, int k) {
  if (!(H > 0.5)) throw InvalidInputError("parabolic profile needs H > 1/2");
  return k * pi / omega_of(H);
}

double parabolic_obstruction(double H) {
  if (!(H > 0.5)) throw InvalidInputError("parabolic profile needs H > 1/2");
  auto h = [H](double t) { return -(parabolic_alpha(H, t) + 2.0 * H * t); };
  const double t0 = parabolic_critical_param(H, 0), t1 = parabolic_critical_param(H, 1);
  return std::abs(h(t1) - h(t0));
}

}  // namespace cmc
