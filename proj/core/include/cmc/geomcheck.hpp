#pragma once

#include <functional>
#include <vector>

#include "cmc/modelspace.hpp"
#include "cmc/profiles.hpp"

namespace cmc {

// Immersion (param, orbit) -> M^2(c) x R.
using SurfaceMap = std::function<AmbientPoint(double param, double orbit)>;

SurfaceMap chart_surface(const ProfileCurve& p);

enum class Stencil { Central, Forward, Backward };

struct FirstForm {
  double E = 0.0, F = 0.0, G = 0.0;
};
struct SecondForm {
  double e = 0.0, f = 0.0, g = 0.0;
};

struct SurfaceSample {
  AmbientPoint position;
  Vec4 d_param{}, d_orbit{};  // coordinate tangent vectors
  Vec4 normal{};  // unit normal, oriented so that the mean curvature is >= 0
  double nu = 0.0;  // vertical component of the normal
  FirstForm first;
  SecondForm second;
  double mean_curvature = 0.0;
  double det_shape = 0.0;  // det of the shape operator
};

struct FdOptions {
  double step = kDefaultStep;
  Stencil param_stencil = Stencil::Central;
  // Recompute at step/2 and require the mean curvature to agree to 1e-5.
  bool richardson_check = true;
};

// First and second fundamental forms from fourth-order finite differences.
SurfaceSample fundamental_forms_at(const SurfaceMap& X, double param, double orbit,
                                   const FdOptions& options = {});

// Unit normal (with the orientation of fundamental_forms_at) and its
// vertical component, from first derivatives only.
double angle_function_at(const SurfaceMap& X, double param, double orbit,
                         double step = kDefaultStep, Stencil stencil = Stencil::Central);

struct DensitySample {
  SurfaceSample sample;
  double grad_nu_sq = 0.0;  // |grad nu|^2
  double q = 0.0;           // Abresch-Rosenberg density
  double gauss_equation_defect = 0.0;  // K - c nu^2 - det A
  double grad_nu_defect = 0.0;         // |grad nu + A (E3)^T| in coordinates
};

// Abresch-Rosenberg density and Gauss/gradient identities at a point.
DensitySample density_at(const SurfaceMap& X, double c, double param, double orbit,
                         double step = kDefaultStep);

struct DensityStats {
  double max_abs_q = 0.0;
  double orbit_variation = 0.0;  // largest spread of q along a single orbit
};
// q over a params x orbits lattice of cell midpoints. The stencil truncation
// error is the same on every point of an orbit (the orbit acts by
// isometries), so only rounding separates values along an orbit; a coarse
// step keeps that rounding small.
DensityStats density_stats(const ProfileCurve& p, int params = 32, int orbits = 8,
                           double step = kDefaultStep);

// Gaussian curvature of the induced metric by the Brioschi formula.
double gaussian_curvature(const SurfaceMap& X, double param, double orbit, double step = 1e-2);

// Scalar field at a chart point; near the rotation axis, the value is
// extrapolated from chart offsets delta and 2 delta.
double at_chart_point(const ProfileCurve& p, double tau,
                      const std::function<double(double)>& field, double delta = 1e-3);

// max |H_num - H| over a grid x grid lattice of interior chart cells.
double mean_curvature_residual(const ProfileCurve& p, int grid = 64);

// Angle function at the boundary, from one-sided stencils into the chart
// domain; one value per boundary component.
std::vector<double> boundary_angles(const ProfileCurve& p);
// The boundary angle of largest magnitude.
double angle_at_boundary(const ProfileCurve& p);
// Angle function at the highest point.
double angle_at_top(const ProfileCurve& p);

// Boundary geodesic curvature measured on the sampled surface, with respect
// to the outer conormal; one value per boundary component.
std::vector<double> measured_boundary_kappas(const ProfileCurve& p,
                                             double step = kDefaultStep);

// Length of the profile from the highest point to the boundary, measured on
// the sampled chart at orbit 0.
double meridian_length(const ProfileCurve& p);

struct ProfileSweep {
  std::vector<double> tau, height, nu, height_slope;  // height_slope = dh/ds
  std::vector<double> mean_curvature;
};
// Samples the chart at n interior points (cell midpoints).
ProfileSweep sweep_profile(const ProfileCurve& p, int n);

}  // namespace cmc
