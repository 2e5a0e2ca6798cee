#pragma once

#include <array>
#include <functional>

namespace cmc {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

enum class Model { Sphere, Plane, Hyperboloid };

struct AmbientPoint;

// Simply connected surface of constant curvature c, realized as the round
// sphere of radius 1/sqrt(c), the plane z = 0, or the upper sheet of the
// hyperboloid x^2 + y^2 - z^2 = -1/|c| in Minkowski space.
class SpaceForm {
 public:
  explicit SpaceForm(double curvature);

  double curvature() const noexcept { return c_; }
  Model model() const noexcept;
  // 1/sqrt|c|; +infinity for the plane.
  double radius() const noexcept;
  // Diagonal entry of the ambient flat metric on the third base coordinate.
  double z_metric() const noexcept { return c_ < 0.0 ? -1.0 : 1.0; }

  double inner(const Vec3& a, const Vec3& b) const noexcept;
  // Product metric on (x, y, z, t).
  double inner(const Vec4& a, const Vec4& b) const noexcept;

  // Geodesic polar coordinates (r, u) about the pole (0, 0, R), or about the
  // origin of the plane. Negative r is allowed and reflects through the pole.
  AmbientPoint polar_point(double r, double u, double height) const;
  // Upper half-plane model with metric R^2 (dx^2 + dy^2) / y^2; c < 0 only.
  AmbientPoint halfplane_point(double x, double y, double height) const;
  // c == 0 only.
  AmbientPoint plane_point(double x, double y, double height) const;

  friend bool operator==(const SpaceForm& a, const SpaceForm& b) noexcept {
    return a.c_ == b.c_;
  }

 private:
  double c_;
};

struct AmbientPoint {
  SpaceForm space{0.0};
  Vec3 base{};  // z == 0 in the flat model
  double height = 0.0;

  Vec4 flat() const { return {base[0], base[1], base[2], height}; }
  // Relative violation of the model equation of the base point.
  double embedding_residual() const;
};

// Builds a point and checks that it lies on the model to 1e-12 (relative).
AmbientPoint make_point(const SpaceForm& space, const Vec3& base, double height);

// Inverse of SpaceForm::halfplane_point for the base point.
std::array<double, 2> to_halfplane(const AmbientPoint& p);

double geodesic_distance(const SpaceForm& space, const AmbientPoint& p,
                         const AmbientPoint& q);

// Unit normal to the model at a base point, as a 4-vector of the product:
// the position direction for c != 0 and e_z for the plane.
Vec4 model_normal(const AmbientPoint& p);

// Unit normal of a base curve inside the model: rotation of the unit tangent
// by +90 degrees with respect to the outward model normal.
Vec3 left_normal(const SpaceForm& space, const Vec3& position, const Vec3& tangent);

struct CurveSampler {
  std::function<AmbientPoint(double)> map;
  Interval domain;
};

inline constexpr double kDefaultStep = 1e-3;

// Geodesic curvature of the base projection of a curve at parameter s,
// measured against left_normal times conormal_sign. Uses fourth-order
// central differences and compares step against step/2.
double curve_geodesic_curvature(const SpaceForm& space, const CurveSampler& curve,
                                double s, double step = kDefaultStep,
                                int conormal_sign = 1);

}  // namespace cmc
