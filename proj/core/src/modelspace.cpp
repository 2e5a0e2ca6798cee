#include "cmc/modelspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cmc/error.hpp"

namespace cmc {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm3(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

}  // namespace

SpaceForm::SpaceForm(double curvature) : c_(curvature) {
  if (!std::isfinite(curvature)) throw InvalidInputError("curvature must be finite");
}

Model SpaceForm::model() const noexcept {
  if (c_ > 0.0) return Model::Sphere;
  if (c_ < 0.0) return Model::Hyperboloid;
  return Model::Plane;
}

double SpaceForm::radius() const noexcept {
  if (c_ == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(std::abs(c_));
}

double SpaceForm::inner(const Vec3& a, const Vec3& b) const noexcept {
  return a[0] * b[0] + a[1] * b[1] + z_metric() * a[2] * b[2];
}

double SpaceForm::inner(const Vec4& a, const Vec4& b) const noexcept {
  return a[0] * b[0] + a[1] * b[1] + z_metric() * a[2] * b[2] + a[3] * b[3];
}

AmbientPoint SpaceForm::polar_point(double r, double u, double height) const {
  AmbientPoint p{*this, {}, height};
  const double cu = std::cos(u), su = std::sin(u);
  switch (model()) {
    case Model::Plane:
      p.base = {r * cu, r * su, 0.0};
      break;
    case Model::Sphere: {
      const double R = radius();
      const double s = R * std::sin(r / R);
      p.base = {s * cu, s * su, R * std::cos(r / R)};
      break;
    }
    case Model::Hyperboloid: {
      const double R = radius();
      const double s = R * std::sinh(r / R);
      p.base = {s * cu, s * su, R * std::cosh(r / R)};
      break;
    }
  }
  return p;
}

AmbientPoint SpaceForm::halfplane_point(double x, double y, double height) const {
  if (model() != Model::Hyperboloid)
    throw InvalidInputError("half-plane coordinates need negative curvature");
  if (!(y > 0.0)) throw DomainError("half-plane point needs y > 0");
  const double R = radius();
  const double q = x * x + y * y;
  return AmbientPoint{*this, {R * x / y, R * (q - 1.0) / (2.0 * y), R * (q + 1.0) / (2.0 * y)},
                      height};
}

AmbientPoint SpaceForm::plane_point(double x, double y, double height) const {
  if (model() != Model::Plane) throw InvalidInputError("plane coordinates need c = 0");
  return AmbientPoint{*this, {x, y, 0.0}, height};
}

double AmbientPoint::embedding_residual() const {
  const auto& b = base;
  const double sq = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  switch (space.model()) {
    case Model::Plane:
      return std::abs(b[2]) / std::max(1.0, std::sqrt(sq));
    case Model::Sphere: {
      const double R2 = 1.0 / space.curvature();
      return std::abs(sq - R2) / R2;
    }
    case Model::Hyperboloid: {
      const double R2 = -1.0 / space.curvature();
      if (b[2] <= 0.0) return std::numeric_limits<double>::infinity();
      const double q = b[0] * b[0] + b[1] * b[1] - b[2] * b[2] + R2;
      return std::abs(q) / std::max(R2, sq);
    }
  }
  return 0.0;
}

AmbientPoint make_point(const SpaceForm& space, const Vec3& base, double height) {
  AmbientPoint p{space, base, height};
  for (double v : base)
    if (!std::isfinite(v)) throw InvalidInputError("non-finite coordinate");
  if (!std::isfinite(height)) throw InvalidInputError("non-finite height");
  const double res = p.embedding_residual();
  if (!(res <= 1e-12)) {
    std::ostringstream os;
    os << "point is off the model (relative residual " << res << ")";
    throw InvalidInputError(os.str());
  }
  return p;
}

std::array<double, 2> to_halfplane(const AmbientPoint& p) {
  if (p.space.model() != Model::Hyperboloid)
    throw InvalidInputError("half-plane coordinates need negative curvature");
  const double R = p.space.radius();
  const double y = R / (p.base[2] - p.base[1]);
  return {p.base[0] * y / R, y};
}

double geodesic_distance(const SpaceForm& space, const AmbientPoint& p,
                         const AmbientPoint& q) {
  if (!(p.space == space) || !(q.space == space))
    throw InvalidInputError("points belong to a different space form");
  const Vec3& a = p.base;
  const Vec3& b = q.base;
  switch (space.model()) {
    case Model::Plane:
      return std::hypot(a[0] - b[0], a[1] - b[1]);
    case Model::Sphere: {
      const double R = space.radius();
      const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
      return R * std::atan2(norm3(cross(a, b)), dot);
    }
    case Model::Hyperboloid: {
      const double R = space.radius();
      const Vec3 d{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
      const double chord2 = std::max(0.0, space.inner(d, d));
      return 2.0 * R * std::asinh(std::sqrt(chord2) / (2.0 * R));
    }
  }
  return 0.0;
}

Vec4 model_normal(const AmbientPoint& p) {
  if (p.space.model() == Model::Plane) return {0.0, 0.0, 1.0, 0.0};
  const double R = p.space.radius();
  return {p.base[0] / R, p.base[1] / R, p.base[2] / R, 0.0};
}

Vec3 left_normal(const SpaceForm& space, const Vec3& position, const Vec3& tangent) {
  Vec3 n;
  switch (space.model()) {
    case Model::Plane:
      n = {-tangent[1], tangent[0], 0.0};
      break;
    case Model::Sphere:
      n = cross(position, tangent);
      break;
    case Model::Hyperboloid:
      n = cross(position, tangent);
      n[2] = -n[2];
      break;
  }
  const double len2 = space.inner(n, n);
  if (!(len2 > 0.0)) throw SingularParametrizationError("degenerate curve tangent");
  const double s = 1.0 / std::sqrt(len2);
  return {n[0] * s, n[1] * s, n[2] * s};
}

namespace {

double kappa_with_step(const SpaceForm& space, const CurveSampler& curve, double s,
                       double h) {
  Vec3 p[5];
  for (int k = 0; k < 5; ++k) {
    const AmbientPoint q = curve.map(s + (k - 2) * h);
    if (!(q.space == space))
      throw InvalidInputError("curve lives in a different space form");
    p[k] = q.base;
  }
  Vec3 d1, d2;
  for (int i = 0; i < 3; ++i) {
    d1[i] = (p[0][i] - 8.0 * p[1][i] + 8.0 * p[3][i] - p[4][i]) / (12.0 * h);
    d2[i] = (-p[0][i] + 16.0 * p[1][i] - 30.0 * p[2][i] + 16.0 * p[3][i] - p[4][i]) /
            (12.0 * h * h);
  }
  const double speed2 = space.inner(d1, d1);
  if (!(speed2 > 0.0)) throw SingularParametrizationError("curve has zero speed");
  const double speed = std::sqrt(speed2);
  const Vec3 tangent{d1[0] / speed, d1[1] / speed, d1[2] / speed};

  // Covariant acceleration: drop the component along the model normal.
  Vec3 acc = d2;
  if (space.model() != Model::Plane) {
    const Vec3& x = p[2];
    const double R2 = 1.0 / std::abs(space.curvature());
    const double along = space.inner(acc, x) / (space.z_metric() * R2);
    for (int i = 0; i < 3; ++i) acc[i] -= along * x[i];
  } else {
    acc[2] = 0.0;
  }
  const Vec3 n = left_normal(space, p[2], tangent);
  return space.inner(acc, n) / speed2;
}

}  // namespace

double curve_geodesic_curvature(const SpaceForm& space, const CurveSampler& curve,
                                double s, double step, int conormal_sign) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidInputError("step must be positive");
  if (conormal_sign != 1 && conormal_sign != -1)
    throw InvalidInputError("conormal sign must be +1 or -1");
  if (!curve.map) throw InvalidInputError("empty curve");
  if (s - 2.0 * step < curve.domain.lo || s + 2.0 * step > curve.domain.hi)
    throw DomainError("stencil leaves the curve domain");

  const double coarse = kappa_with_step(space, curve, s, step);
  const double fine = kappa_with_step(space, curve, s, 0.5 * step);
  if (std::abs(coarse - fine) > 1e-6 * std::max(1.0, std::abs(fine))) {
    std::ostringstream os;
    os << "geodesic curvature not resolved: " << coarse << " at step " << step << " vs "
       << fine << " at half step";
    throw AccuracyError(os.str());
  }
  return conormal_sign * coarse;
}

}  // namespace cmc
