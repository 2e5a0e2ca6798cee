#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cmc/modelspace.hpp"

namespace cmc {

enum class FamilyTag {
  RotSphereH2xR,    // Hsiang sphere in H^2 x R, H > 1/2
  RotSphereS2xR,    // rotational sphere in S^2 x R
  RotTorusS2xR,     // rotational torus in S^2 x R
  RotGeneralS2xR,   // rotational profile in S^2 x R with first integral aux
  HypCylinderH2xR,  // hyperbolic-translation cylinder, zero energy
  HypGeneralH2xR,   // hyperbolic-translation profile with energy aux
  ParabolicH2xR,    // parabolic-translation profile
  EuclSphere,       // round sphere of radius 1/H in R^3
  EuclCylinder,     // round cylinder of radius 1/(2H) in R^3
};

const char* to_string(FamilyTag tag) noexcept;

struct ProfileFamily {
  FamilyTag tag = FamilyTag::EuclSphere;
  double H = 1.0;
  double aux = 0.0;  // first integral c0 or energy E; unused otherwise
};

enum class OrbitKind { Rotation, HyperbolicTranslation, ParabolicTranslation, EuclideanTranslation };

// Which sharp height the bigraph realizes.
enum class HeightClass { None, Sphere, HalfSphere };

struct ChartPoint {
  double base = 0.0;    // same meaning as ProfileCurve::base
  double height = 0.0;
};

// Generating curve of an H-surface invariant under a one-parameter group of
// horizontal isometries, in its natural parameter, together with a regular
// chart of the same curve that stays smooth through the axis and the slice.
class ProfileCurve {
 public:
  const ProfileFamily& family() const noexcept { return family_; }
  const SpaceForm& space() const noexcept { return space_; }
  OrbitKind orbit_kind() const noexcept { return orbit_; }
  HeightClass height_class() const noexcept { return height_class_; }
  bool is_bigraph() const noexcept { return bigraph_; }

  // Natural parameter: r (rotational), x or t (hyperbolic), t (parabolic),
  // rho or x (Euclidean).
  const Interval& domain() const noexcept { return domain_; }
  double height(double param) const;
  // Coordinate transverse to the orbits: signed distance r to the axis for
  // rotations, half-plane abscissa x for hyperbolic translations, half-plane
  // ordinate y for parabolic translations, x for Euclidean translations.
  double base(double param) const;
  // Signed intrinsic distance in the base measured along the profile's
  // transverse geodesic.
  double base_arclength(double param) const;
  // The same intrinsic coordinate as a function of the base value.
  double base_arclength_of(double base) const;

  const Interval& chart_domain() const noexcept { return chart_domain_; }
  ChartPoint chart(double tau) const;
  double chart_param_of(double param) const;

  // Natural parameters at which the profile meets the slice.
  const std::vector<double>& boundary_params() const noexcept { return boundary_; }
  // Chart parameters of the same boundary points, in the same order. Empty
  // when the chart stops short of the slice.
  const std::vector<double>& boundary_chart_params() const noexcept { return chart_boundary_; }
  // Chart parameter of the highest point.
  double chart_top() const noexcept { return chart_top_; }
  // Natural parameter on the far side of the boundary, used to orient the
  // boundary conormal.
  double interior_param() const noexcept { return interior_; }

  // Orbit of the transverse coordinate under the isometry group.
  AmbientPoint place(double base, double orbit, double height) const;
  Interval orbit_range() const;

 private:
  friend ProfileCurve make_profile(const ProfileFamily&);
  ProfileCurve(const ProfileFamily& f, double c) : family_(f), space_(c) {}

  ProfileFamily family_;
  SpaceForm space_;
  OrbitKind orbit_ = OrbitKind::Rotation;
  HeightClass height_class_ = HeightClass::None;
  bool bigraph_ = false;
  Interval domain_;
  Interval chart_domain_;
  std::vector<double> boundary_;
  std::vector<double> chart_boundary_;
  double chart_top_ = 0.0;
  double interior_ = 0.0;
  std::function<double(double)> height_fn_;
  std::function<double(double)> base_fn_;
  std::function<double(double)> arclength_fn_;
  std::function<ChartPoint(double)> chart_fn_;
  std::function<double(double)> chart_of_fn_;
};

// Throws InvalidInputError for parameters outside the family's range and
// NoSolutionError when no profile exists for the given first integral.
ProfileCurve make_profile(const ProfileFamily& family);

AmbientPoint sample_surface(const ProfileCurve& p, double param, double orbit);
AmbientPoint sample_chart(const ProfileCurve& p, double tau, double orbit);

// Sharp maximal height of a bigraph profile; InvalidInputError otherwise.
double max_height(const ProfileCurve& p);
// Closed-form geodesic curvature of the boundary with respect to the outer
// conormal; InvalidInputError for non-bigraphs.
double boundary_kappa(const ProfileCurve& p);

struct TorusArgmax {
  double H = 0.0;
  double height = 0.0;
};
// Mean curvature maximizing the height of the rotational torus in S^2 x R.
TorusArgmax torus_height_argmax(double xtol = 1e-10);

// Angle function of the parabolic-translation profile, solving
// alpha' = -2H - cos(alpha) with alpha(0) = 0 (continuous branch).
double parabolic_alpha(double H, double t);
// Critical parameters t_k = k pi / omega where the profile is vertical.
double parabolic_critical_param(double H, int k);
// |h(t_{k+1}) - h(t_k)| for the parabolic profile.
double parabolic_obstruction(double H);

}  // namespace cmc
