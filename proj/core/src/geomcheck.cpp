#include "cmc/geomcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "cmc/error.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

namespace {

using Weights = std::vector<std::pair<int, double>>;

const Weights& first_weights(Stencil s) {
  static const Weights central{{-2, 1.0 / 12}, {-1, -8.0 / 12}, {1, 8.0 / 12}, {2, -1.0 / 12}};
  static const Weights forward{
      {0, -25.0 / 12}, {1, 48.0 / 12}, {2, -36.0 / 12}, {3, 16.0 / 12}, {4, -3.0 / 12}};
  static const Weights backward{
      {0, 25.0 / 12}, {-1, -48.0 / 12}, {-2, 36.0 / 12}, {-3, -16.0 / 12}, {-4, 3.0 / 12}};
  switch (s) {
    case Stencil::Forward: return forward;
    case Stencil::Backward: return backward;
    case Stencil::Central: break;
  }
  return central;
}

const Weights& second_weights(Stencil s) {
  static const Weights central{
      {-2, -1.0 / 12}, {-1, 16.0 / 12}, {0, -30.0 / 12}, {1, 16.0 / 12}, {2, -1.0 / 12}};
  static const Weights forward{{0, 45.0 / 12},  {1, -154.0 / 12}, {2, 214.0 / 12},
                               {3, -156.0 / 12}, {4, 61.0 / 12},  {5, -10.0 / 12}};
  static const Weights backward{{0, 45.0 / 12},   {-1, -154.0 / 12}, {-2, 214.0 / 12},
                                {-3, -156.0 / 12}, {-4, 61.0 / 12},  {-5, -10.0 / 12}};
  switch (s) {
    case Stencil::Forward: return forward;
    case Stencil::Backward: return backward;
    case Stencil::Central: break;
  }
  return central;
}

// Lazily evaluated lattice X(param + i h, orbit + j h).
class Lattice {
 public:
  Lattice(const SurfaceMap& X, double param, double orbit, double h)
      : X_(X), param_(param), orbit_(orbit), h_(h) {}

  const Vec4& at(int i, int j) {
    auto it = cache_.find({i, j});
    if (it != cache_.end()) return it->second;
    const AmbientPoint p = X_(param_ + i * h_, orbit_ + j * h_);
    return cache_.emplace(std::make_pair(i, j), p.flat()).first->second;
  }
  AmbientPoint center() { return X_(param_, orbit_); }

 private:
  const SurfaceMap& X_;
  double param_, orbit_, h_;
  std::map<std::pair<int, int>, Vec4> cache_;
};

Vec4 combine(Lattice& L, const Weights& wi, const Weights& wj, double scale) {
  Vec4 out{};
  for (const auto& [i, a] : wi)
    for (const auto& [j, b] : wj) {
      const Vec4& v = L.at(i, j);
      for (int k = 0; k < 4; ++k) out[k] += a * b * v[k];
    }
  for (double& v : out) v *= scale;
  return out;
}

const Weights kIdentity{{0, 1.0}};

// w_i = eps_{ijkl} a_j b_k c_l, so that sum_i w_i v_i = det(v, a, b, c).
Vec4 cofactor_cross(const Vec4& a, const Vec4& b, const Vec4& c) {
  auto det3 = [](double a0, double a1, double a2, double b0, double b1, double b2, double c0,
                 double c1, double c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
  };
  return {det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]),
          -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]),
          det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]),
          -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2])};
}

SurfaceSample forms_with_step(const SurfaceMap& X, double param, double orbit, double h,
                              Stencil stencil) {
  Lattice L(X, param, orbit, h);
  SurfaceSample s;
  s.position = L.center();
  const SpaceForm& space = s.position.space;
  const Weights& c1 = first_weights(Stencil::Central);
  const Weights& c2 = second_weights(Stencil::Central);

  const Vec4 Xu = combine(L, first_weights(stencil), kIdentity, 1.0 / h);
  const Vec4 Xv = combine(L, kIdentity, c1, 1.0 / h);
  const Vec4 Xuu = combine(L, second_weights(stencil), kIdentity, 1.0 / (h * h));
  const Vec4 Xvv = combine(L, kIdentity, c2, 1.0 / (h * h));
  const Vec4 Xuv = combine(L, first_weights(stencil), c1, 1.0 / (h * h));
  s.d_param = Xu;
  s.d_orbit = Xv;

  s.first = {space.inner(Xu, Xu), space.inner(Xu, Xv), space.inner(Xv, Xv)};
  const double det1 = s.first.E * s.first.G - s.first.F * s.first.F;
  if (!(det1 >= 1e-14)) {
    std::ostringstream os;
    os << "degenerate first fundamental form (EG - F^2 = " << det1 << ") at (" << param
       << ", " << orbit << ")";
    throw SingularParametrizationError(os.str());
  }

  const Vec4 w = cofactor_cross(Xu, Xv, model_normal(s.position));
  Vec4 N{w[0], w[1], w[2] * space.z_metric(), w[3]};
  const double n2 = space.inner(N, N);
  if (!(n2 > 0.0)) throw SingularParametrizationError("degenerate normal");
  for (double& v : N) v /= std::sqrt(n2);

  SecondForm b{space.inner(Xuu, N), space.inner(Xuv, N), space.inner(Xvv, N)};
  double Hn = (b.e * s.first.G - 2.0 * b.f * s.first.F + b.g * s.first.E) / (2.0 * det1);
  if (Hn < 0.0) {
    Hn = -Hn;
    for (double& v : N) v = -v;
    b = {-b.e, -b.f, -b.g};
  }
  s.normal = N;
  s.nu = N[3];
  s.second = b;
  s.mean_curvature = Hn;
  s.det_shape = (b.e * b.g - b.f * b.f) / det1;
  return s;
}

}  // namespace

SurfaceMap chart_surface(const ProfileCurve& p) {
  return [&p](double tau, double orbit) { return sample_chart(p, tau, orbit); };
}

SurfaceSample fundamental_forms_at(const SurfaceMap& X, double param, double orbit,
                                   const FdOptions& options) {
  if (!X) throw InvalidInputError("empty surface map");
  if (!(options.step > 0.0) || !std::isfinite(param) || !std::isfinite(orbit))
    throw InvalidInputError("bad finite-difference request");
  SurfaceSample s = forms_with_step(X, param, orbit, options.step, options.param_stencil);
  if (options.richardson_check) {
    const SurfaceSample half =
        forms_with_step(X, param, orbit, 0.5 * options.step, options.param_stencil);
    const double diff = std::abs(s.mean_curvature - half.mean_curvature);
    if (diff > 1e-5 * std::max(1.0, std::abs(half.mean_curvature))) {
      std::ostringstream os;
      os << "step " << options.step << " does not resolve the curvature at (" << param << ", "
         << orbit << "): " << s.mean_curvature << " vs " << half.mean_curvature;
      throw AccuracyError(os.str());
    }
  }
  return s;
}

double angle_function_at(const SurfaceMap& X, double param, double orbit, double step,
                         Stencil stencil) {
  FdOptions o;
  o.step = step;
  o.param_stencil = stencil;
  o.richardson_check = false;
  return fundamental_forms_at(X, param, orbit, o).nu;
}

DensitySample density_at(const SurfaceMap& X, double c, double param, double orbit,
                         double step) {
  FdOptions o;
  o.step = step;
  o.richardson_check = false;
  DensitySample d;
  d.sample = fundamental_forms_at(X, param, orbit, o);
  const SurfaceSample& s = d.sample;

  auto nu = [&](double a, double b) { return fundamental_forms_at(X, a, b, o).nu; };
  double nu_u = 0.0, nu_v = 0.0;
  for (const auto& [k, w] : first_weights(Stencil::Central)) {
    nu_u += w * nu(param + k * step, orbit);
    nu_v += w * nu(param, orbit + k * step);
  }
  nu_u /= step;
  nu_v /= step;

  const auto& [E, F, G] = s.first;
  const double det1 = E * G - F * F;
  d.grad_nu_sq = (G * nu_u * nu_u - 2.0 * F * nu_u * nu_v + E * nu_v * nu_v) / det1;

  const double H = s.mean_curvature, K = s.det_shape, v2 = s.nu * s.nu;
  d.q = 4.0 * H * H * (H * H - K) + 0.25 * c * c * (1.0 - v2) * (1.0 - v2) -
        c * (d.grad_nu_sq - (2.0 * H * H - K) * (1.0 - v2));

  // grad nu = -A (E3)^T, in coordinates: nu_k = -b_kj g^{ji} h_i.
  const double hu = s.d_param[3], hv = s.d_orbit[3];
  const double gi_u = (G * hu - F * hv) / det1;  // g^{uj} h_j
  const double gi_v = (-F * hu + E * hv) / det1;  // g^{vj} h_j
  const double pred_u = -(s.second.e * gi_u + s.second.f * gi_v);
  const double pred_v = -(s.second.f * gi_u + s.second.g * gi_v);
  d.grad_nu_defect = std::max(std::abs(nu_u - pred_u), std::abs(nu_v - pred_v));

  d.gauss_equation_defect = gaussian_curvature(X, param, orbit) - c * v2 - K;
  return d;
}

DensityStats density_stats(const ProfileCurve& p, int params, int orbits, double step) {
  if (params < 1 || orbits < 2) throw InvalidInputError("lattice too small");
  const SurfaceMap X = chart_surface(p);
  const Interval d = p.chart_domain();
  const Interval o = p.orbit_range();
  const double c = p.space().curvature();
  DensityStats out;
  for (int i = 0; i < params; ++i) {
    const double tau = d.lo + (i + 0.5) / params * d.length();
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int j = 0; j < orbits; ++j) {
      const double q = density_at(X, c, tau, o.lo + (j + 0.5) / orbits * o.length(), step).q;
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      out.max_abs_q = std::max(out.max_abs_q, std::abs(q));
    }
    out.orbit_variation = std::max(out.orbit_variation, hi - lo);
  }
  return out;
}

double gaussian_curvature(const SurfaceMap& X, double param, double orbit, double step) {
  FdOptions o;
  o.step = kDefaultStep;
  o.richardson_check = false;
  std::map<std::pair<int, int>, FirstForm> cache;
  auto form = [&](int i, int j) {
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
    const FirstForm f = fundamental_forms_at(X, param + i * step, orbit + j * step, o).first;
    cache.emplace(std::make_pair(i, j), f);
    return f;
  };
  const Weights& d1 = first_weights(Stencil::Central);
  const Weights& d2 = second_weights(Stencil::Central);
  auto deriv = [&](double FirstForm::*m, const Weights& wi, const Weights& wj, double scale) {
    double acc = 0.0;
    for (const auto& [i, a] : wi)
      for (const auto& [j, b] : wj) acc += a * b * (form(i, j).*m);
    return acc * scale;
  };
  const double h = step, h2 = step * step;
  const FirstForm f0 = form(0, 0);
  const double E = f0.E, F = f0.F, G = f0.G;
  const double Eu = deriv(&FirstForm::E, d1, kIdentity, 1.0 / h);
  const double Ev = deriv(&FirstForm::E, kIdentity, d1, 1.0 / h);
  const double Fu = deriv(&FirstForm::F, d1, kIdentity, 1.0 / h);
  const double Fv = deriv(&FirstForm::F, kIdentity, d1, 1.0 / h);
  const double Gu = deriv(&FirstForm::G, d1, kIdentity, 1.0 / h);
  const double Gv = deriv(&FirstForm::G, kIdentity, d1, 1.0 / h);
  const double Evv = deriv(&FirstForm::E, kIdentity, d2, 1.0 / h2);
  const double Guu = deriv(&FirstForm::G, d2, kIdentity, 1.0 / h2);
  const double Fuv = deriv(&FirstForm::F, d1, d1, 1.0 / h2);

  auto det3 = [](double a, double b, double c, double d, double e, double f, double g,
                 double hh, double i) {
    return a * (e * i - f * hh) - b * (d * i - f * g) + c * (d * hh - e * g);
  };
  const double m1 = det3(-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
                         Fv - 0.5 * Gu, E, F, 0.5 * Gv, F, G);
  const double m2 = det3(0.0, 0.5 * Ev, 0.5 * Gu, 0.5 * Ev, E, F, 0.5 * Gu, F, G);
  const double det1 = E * G - F * F;
  return (m1 - m2) / (det1 * det1);
}

namespace {

bool on_axis(const ProfileCurve& p, double tau) {
  if (p.orbit_kind() != OrbitKind::Rotation) return false;
  return std::abs(p.chart(tau).base) <= 1e-9;
}

}  // namespace

double at_chart_point(const ProfileCurve& p, double tau,
                      const std::function<double(double)>& field, double delta) {
  if (!on_axis(p, tau)) return field(tau);
  const Interval d = p.chart_domain();
  const double dir = tau + 2.0 * delta <= d.hi ? 1.0 : -1.0;
  return (4.0 * field(tau + dir * delta) - field(tau + 2.0 * dir * delta)) / 3.0;
}

double mean_curvature_residual(const ProfileCurve& p, int grid) {
  if (grid < 1) throw InvalidInputError("grid must be positive");
  const SurfaceMap X = chart_surface(p);
  const Interval d = p.chart_domain();
  const Interval o = p.orbit_range();
  const double H = p.family().H;
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double tau = d.lo + (i + 0.5) / grid * d.length();
    for (int j = 0; j < grid; ++j) {
      const double u = o.lo + (j + 0.5) / grid * o.length();
      auto field = [&](double t) { return fundamental_forms_at(X, t, u).mean_curvature; };
      worst = std::max(worst, std::abs(at_chart_point(p, tau, field) - H));
    }
  }
  return worst;
}

namespace {

// Chart parameters of the boundary components, each with the one-sided
// stencil that points into the chart domain.
std::vector<std::pair<double, Stencil>> boundary_chart_points(const ProfileCurve& p) {
  if (!p.is_bigraph()) throw DomainError("profile has no boundary on the slice");
  const auto& taus = p.boundary_chart_params();
  if (taus.size() != p.boundary_params().size())
    throw DomainError(std::string(to_string(p.family().tag)) +
                      " chart does not reach the boundary");
  const Interval d = p.chart_domain();
  std::vector<std::pair<double, Stencil>> out;
  for (double tau : taus) {
    if (tau == d.lo) out.emplace_back(tau, Stencil::Forward);
    else if (tau == d.hi) out.emplace_back(tau, Stencil::Backward);
    else out.emplace_back(tau, Stencil::Central);
  }
  return out;
}

}  // namespace

std::vector<double> boundary_angles(const ProfileCurve& p) {
  const SurfaceMap X = chart_surface(p);
  const double u = p.orbit_range().mid();
  std::vector<double> out;
  for (const auto& [tau, st] : boundary_chart_points(p)) {
    out.push_back(angle_function_at(X, tau, u, kDefaultStep, st));
  }
  return out;
}

double angle_at_boundary(const ProfileCurve& p) {
  double best = 0.0;
  for (double v : boundary_angles(p))
    if (std::abs(v) >= std::abs(best)) best = v;
  return best;
}

double angle_at_top(const ProfileCurve& p) {
  const SurfaceMap X = chart_surface(p);
  const double u = p.orbit_range().mid();
  auto field = [&](double t) { return angle_function_at(X, t, u); };
  return at_chart_point(p, p.chart_top(), field);
}

std::vector<double> measured_boundary_kappas(const ProfileCurve& p, double step) {
  const SpaceForm& space = p.space();
  const Interval o = p.orbit_range();
  const double u = o.mid();
  const double interior_tau = p.chart_param_of(p.interior_param());
  std::vector<double> out;
  for (const auto& bp : boundary_chart_points(p)) {
    const double tau = bp.first;
    CurveSampler curve{[&p, tau](double s) { return sample_chart(p, tau, s); }, o};

    // Orient by the chord from the interior point to the boundary point.
    const Vec3 pb = sample_chart(p, tau, u).base;
    const Vec3 pi = sample_chart(p, interior_tau, u).base;
    const Vec3 qa = sample_chart(p, tau, u + step).base;
    const Vec3 qb = sample_chart(p, tau, u - step).base;
    Vec3 t{qa[0] - qb[0], qa[1] - qb[1], qa[2] - qb[2]};
    const double tl = std::sqrt(std::abs(space.inner(t, t)));
    for (double& v : t) v /= tl;
    const Vec3 n = left_normal(space, pb, t);
    const Vec3 chord{pb[0] - pi[0], pb[1] - pi[1], pb[2] - pi[2]};
    const int sign = space.inner(chord, n) >= 0.0 ? 1 : -1;
    out.push_back(curve_geodesic_curvature(space, curve, u, step, sign));
  }
  return out;
}

double meridian_length(const ProfileCurve& p) {
  if (!p.is_bigraph()) throw DomainError("profile has no boundary on the slice");
  const SurfaceMap X = chart_surface(p);
  const double top = p.chart_top();
  const double end = boundary_chart_points(p).back().first;
  const double u = p.orbit_range().mid();
  const SpaceForm& space = p.space();
  const double h = kDefaultStep;
  auto speed = [&](double tau) {
    Vec4 d{};
    for (const auto& [k, w] : first_weights(Stencil::Central)) {
      const Vec4 v = X(tau + k * h, u).flat();
      for (int i = 0; i < 4; ++i) d[i] += w * v[i] / h;
    }
    return std::sqrt(space.inner(d, d));
  };
  return std::abs(quad_singular(speed, top, end, 1e-12));
}

ProfileSweep sweep_profile(const ProfileCurve& p, int n) {
  if (n < 1) throw InvalidInputError("sample count must be positive");
  const SurfaceMap X = chart_surface(p);
  const Interval d = p.chart_domain();
  const double u = p.orbit_range().mid();
  FdOptions o;
  o.richardson_check = false;
  ProfileSweep s;
  for (int i = 0; i < n; ++i) {
    const double tau = d.lo + (i + 0.5) / n * d.length();
    auto sample = [&](double t) { return fundamental_forms_at(X, t, u, o); };
    auto nu = [&](double t) { return sample(t).nu; };
    auto slope = [&](double t) {
      const SurfaceSample q = sample(t);
      return q.d_param[3] / std::sqrt(q.first.E);
    };
    auto hm = [&](double t) { return sample(t).mean_curvature; };
    s.tau.push_back(tau);
    s.height.push_back(p.chart(tau).height);
    s.nu.push_back(at_chart_point(p, tau, nu));
    s.height_slope.push_back(slope(tau));
    s.mean_curvature.push_back(at_chart_point(p, tau, hm));
  }
  return s;
}

}  // namespace cmc
