#pragma once

#include <optional>

namespace cmc {

// Parameters of the height and curvature estimates for a compact H-graph in
// M^2(c) x R whose boundary meets the slice at angle nu0.
struct EstimateParams {
  double c = 0.0;
  double H = 1.0;
  double nu0 = 0.0;
  std::optional<double> m;  // height fraction in (0, 1/2]

  // Throws InvalidInputError unless H > 0, 4H^2 + c > 0, -1 < nu0 <= 0 and
  // 0 < m <= 1/2 when m is present.
  void validate() const;
};

// Antiderivative of 4H / (4H^2 + c (1 - t^2)) vanishing at t = 0.
double g_value(const EstimateParams& p, double t);
// The integrand above.
double g_derivative(const EstimateParams& p, double t);
// Inverse of g_value on its range.
double g_inverse(const EstimateParams& p, double y);

// Sharp maximal height of the graph over the slice.
double alpha_max(const EstimateParams& p);

// Lower bound for the geodesic curvature of the boundary.
double kappa_lower_general(const EstimateParams& p);
// Lower bound when the height is at most m * alpha_max; needs p.m.
double kappa_lower_height(const EstimateParams& p);

// Comparison function for nu^2 at height s in [0, alpha_max].
double zeta(const EstimateParams& p, double s);
// 1 - zeta(s), evaluated without cancellation near alpha_max.
double one_minus_zeta(const EstimateParams& p, double s);

// Lower bound for the intrinsic distance from the boundary to a point at
// height h in [0, alpha_max].
double distance_lower_bound(const EstimateParams& p, double h);

// Height fraction below which the boundary curve is convex, for both forms
// in which the nu0 correction can appear.
struct ConvexityCap {
  double square_of_difference = 0.0;  // c (1 - nu0)^2
  double difference_of_squares = 0.0;  // c (1 - nu0^2)
};
ConvexityCap convexity_height_cap(const EstimateParams& p);

}  // namespace cmc
