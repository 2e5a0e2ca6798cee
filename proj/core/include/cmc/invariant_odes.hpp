#pragma once

#include <optional>
#include <string>

#include "cmc/numerics.hpp"
#include "cmc/profiles.hpp"

namespace cmc {

// Arc-length system for surfaces invariant under hyperbolic translations:
// state (h, x, alpha) with h' = cos a, x' = sqrt(1+x^2) sin a,
// a' = 2H + x cos a / sqrt(1+x^2). The energy is attached as invariant.
OdeSystem hyperbolic_translation_system(double H);
double hyperbolic_energy(double H, double x, double alpha);

// Arc-length system for surfaces invariant under parabolic translations:
// state (y, h, alpha) with y' = y sin a, h' = cos a, a' = -2H - cos a.
OdeSystem parabolic_translation_system(double H);

// Rotational profile in M^2(c) x R with the distance r to the axis as
// parameter: state (h, sigma) with h' = cot sigma and
// sigma' = (2H + (f'/f)(r) cos sigma) / sin sigma, f the warping function.
OdeSystem rotational_system(double c, double H);

// Same profile in arc length, regular at vertical points: state (r, h, theta)
// with r' = cos theta, h' = sin theta, theta' = 2H - (f'/f)(r) sin theta.
OdeSystem rotational_arclength_system(double c, double H);

// Height reached by the arc-length rotational system started vertically
// upwards at (r_boundary, 0) when the curve first turns horizontal
// (theta = pi). Needs 0 < r_boundary, and r_boundary < pi R when c > 0.
double rotational_top_height(double c, double H, double r_boundary, double rtol = 1e-12,
                             double atol = 1e-14);

struct OdeCrossCheck {
  double sup_deviation = 0.0;    // ODE against the profile's own formulas
  double invariant_drift = 0.0;  // energy drift where one exists
  double ode_max_height = 0.0;   // highest point of the integrated curve
  bool top_reached = false;      // false when the pieces skip the highest point
  double ode_span_height = 0.0;  // h(end) - h(start) of the integrated curve
};

// Integrates the family's ODE from the profile's own initial data and
// compares with its closed-form or quadrature heights. Empty for families
// with no ODE description here.
std::optional<OdeCrossCheck> ode_cross_check(const ProfileCurve& p, double rtol = 1e-12,
                                             double atol = 1e-14);

}  // namespace cmc
