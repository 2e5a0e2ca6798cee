#include "cmc/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cmc/error.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

void EstimateParams::validate() const {
  if (!std::isfinite(c) || !std::isfinite(H) || !std::isfinite(nu0))
    throw InvalidInputError("estimate parameters must be finite");
  if (!(H > 0.0)) throw InvalidInputError("mean curvature H must be positive");
  if (!(4.0 * H * H + c > 0.0)) throw InvalidInputError("need 4H^2 + c > 0");
  if (!(nu0 > -1.0 && nu0 <= 0.0)) throw InvalidInputError("need -1 < nu0 <= 0");
  if (m && !(*m > 0.0 && *m <= 0.5)) throw InvalidInputError("need 0 < m <= 1/2");
}

namespace {

struct Branch {
  double D;  // 4H^2 + c
  double A;  // sqrt(D/|c|)
  double K;  // sqrt(|c| D) / (4H)
};

Branch branch(const EstimateParams& p) {
  const double D = 4.0 * p.H * p.H + p.c;
  const double ac = std::abs(p.c);
  if (ac == 0.0) return {D, 0.0, 0.0};
  return {D, std::sqrt(D / ac), std::sqrt(ac * D) / (4.0 * p.H)};
}

// 1 - t where t = g^{-1}(y), given the gap delta = g(1) - y.
double one_minus_ginv(const EstimateParams& p, double y, double delta) {
  if (p.c == 0.0) return p.H * delta;
  const Branch b = branch(p);
  const double y1 = g_value(p, 1.0);
  if (p.c > 0.0)
    return b.A * std::sinh(b.K * delta) / (std::cosh(b.K * y1) * std::cosh(b.K * y));
  return b.A * std::sin(b.K * delta) / (std::cos(b.K * y1) * std::cos(b.K * y));
}

double checked_height(const EstimateParams& p, double s, const char* what) {
  const double a = alpha_max(p);
  if (!(s >= 0.0) || s > a * (1.0 + 4e-16)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": height " << s << " outside [0, " << a << "]";
    throw DomainError(os.str());
  }
  return std::min(s, a);
}

}  // namespace

double g_value(const EstimateParams& p, double t) {
  p.validate();
  if (!(std::abs(t) <= 1.0)) throw DomainError("g is defined on [-1, 1]");
  const double D = 4.0 * p.H * p.H + p.c;
  if (p.c > 0.0)
    return 4.0 * p.H / std::sqrt(p.c * D) * std::atanh(t * std::sqrt(p.c) / std::sqrt(D));
  if (p.c < 0.0)
    return 4.0 * p.H / std::sqrt(-p.c * D) * std::atan(t * std::sqrt(-p.c) / std::sqrt(D));
  return t / p.H;
}

double g_derivative(const EstimateParams& p, double t) {
  p.validate();
  if (!(std::abs(t) <= 1.0)) throw DomainError("g is defined on [-1, 1]");
  return 4.0 * p.H / (4.0 * p.H * p.H + p.c * (1.0 - t * t));
}

double g_inverse(const EstimateParams& p, double y) {
  const double y1 = g_value(p, 1.0);
  if (!(std::abs(y) <= y1 * (1.0 + 4e-16))) throw DomainError("value outside the range of g");
  if (p.c == 0.0) return std::clamp(p.H * y, -1.0, 1.0);
  const Branch b = branch(p);
  const double t = p.c > 0.0 ? b.A * std::tanh(b.K * y) : b.A * std::tan(b.K * y);
  return std::clamp(t, -1.0, 1.0);
}

double alpha_max(const EstimateParams& p) { return g_value(p, 1.0) + g_value(p, p.nu0); }

double kappa_lower_general(const EstimateParams& p) {
  p.validate();
  const double w = 1.0 - p.nu0 * p.nu0;
  return (-p.H + p.c * w / (4.0 * p.H)) / std::sqrt(w);
}

double kappa_lower_height(const EstimateParams& p) {
  p.validate();
  if (!p.m) throw InvalidInputError("height-restricted bound needs m");
  const double m = *p.m;
  const double w = 1.0 - p.nu0 * p.nu0;
  return ((1.0 - 2.0 * m) * p.H / m + p.c * w / (4.0 * m * p.H)) / std::sqrt(w);
}

double zeta(const EstimateParams& p, double s) {
  s = checked_height(p, s, "zeta");
  const double y = std::min(s - g_value(p, p.nu0), g_value(p, 1.0));
  const double t = g_inverse(p, y);
  return t * t;
}

double one_minus_zeta(const EstimateParams& p, double s) {
  s = checked_height(p, s, "one_minus_zeta");
  const double y = s - g_value(p, p.nu0);
  const double t = g_inverse(p, std::min(y, g_value(p, 1.0)));
  return one_minus_ginv(p, y, alpha_max(p) - s) * (1.0 + t);
}

double distance_lower_bound(const EstimateParams& p, double h) {
  h = checked_height(p, h, "distance_lower_bound");
  if (h == 0.0) return 0.0;
  const double a = alpha_max(p);
  const double gnu0 = g_value(p, p.nu0);
  const double y1 = g_value(p, 1.0);
  const double top_gap = a - h;
  auto integrand = [&](double s, double, double to_h) {
    const double gap = top_gap + to_h;
    const double y = std::min(s - gnu0, y1);
    const double t = g_inverse(p, y);
    const double w = one_minus_ginv(p, y, gap) * (1.0 + t);
    return 1.0 / std::sqrt(w);
  };
  return quad_singular(integrand, 0.0, h, 1e-12);
}

ConvexityCap convexity_height_cap(const EstimateParams& p) {
  p.validate();
  ConvexityCap cap{0.5, 0.5};
  if (p.c < 0.0) {
    const double h2 = 8.0 * p.H * p.H;
    cap.square_of_difference =
        std::min(0.5, (4.0 * p.H * p.H + p.c * (1.0 - p.nu0) * (1.0 - p.nu0)) / h2);
    cap.difference_of_squares =
        std::min(0.5, (4.0 * p.H * p.H + p.c * (1.0 - p.nu0 * p.nu0)) / h2);
  }
  return cap;
}

}  // namespace cmc
