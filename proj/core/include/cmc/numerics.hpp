#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cmc/modelspace.hpp"

namespace cmc {

using State = std::vector<double>;

struct OdeSystem {
  std::size_t dimension = 0;
  // dy/dt = rhs(t, y), written into dydt.
  std::function<void(double t, std::span<const double> y, std::span<double> dydt)> rhs;
  // Optional conserved quantity; its drift along the solution is recorded.
  std::function<double(std::span<const double> y)> invariant;
};

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0 selects a step automatically
  std::size_t max_steps = 2'000'000;
};

// Accepted steps of a Dormand-Prince 5(4) integration plus the quartic
// continuous extension on each step.
class OdeSolution {
 public:
  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  std::span<const double> state(std::size_t i) const;
  State operator()(double t) const;
  double component(double t, std::size_t k) const;
  double max_invariant_drift() const noexcept { return drift_; }
  std::size_t rhs_evaluations() const noexcept { return evaluations_; }
  double t_begin() const { return nodes_.front(); }
  double t_end() const { return nodes_.back(); }

 private:
  friend OdeSolution integrate_ivp(const OdeSystem&, const State&, Interval,
                                   const OdeOptions&);
  std::size_t locate(double t) const;

  std::size_t dim_ = 0;
  std::vector<double> nodes_;
  std::vector<double> states_;  // nodes_.size() * dim_
  std::vector<double> dense_;   // (nodes_.size() - 1) * 5 * dim_
  double drift_ = 0.0;
  std::size_t evaluations_ = 0;
};

// Integrates from span.lo to span.hi (span.hi < span.lo integrates backwards).
OdeSolution integrate_ivp(const OdeSystem& system, const State& y0, Interval span,
                          const OdeOptions& options = {});

inline OdeSolution integrate_ivp(const OdeSystem& system, const State& y0, Interval span,
                                 double rtol, double atol) {
  OdeOptions o;
  o.rtol = rtol;
  o.atol = atol;
  return integrate_ivp(system, y0, span, o);
}

// Integrand given the abscissa together with its distances to both ends,
// which stay accurate where x itself has rounded onto an endpoint.
using EndpointIntegrand = std::function<double(double x, double from_a, double to_b)>;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  std::vector<double> level_estimates;
};

// Double-exponential (tanh-sinh) rule for integrands with integrable
// endpoint singularities, refined by halving the step until two successive
// levels agree to tol * max(1, |I|). With skip_endpoint_nodes, nodes whose
// abscissa rounds onto a or b contribute nothing.
QuadResult quad_singular_detailed(const EndpointIntegrand& f, double a, double b,
                                  double tol = 1e-11, bool skip_endpoint_nodes = false);

template <class F>
  requires std::invocable<F&, double, double, double> || std::invocable<F&, double>
double quad_singular(F&& f, double a, double b, double tol = 1e-11) {
  if constexpr (std::invocable<F&, double, double, double>) {
    return quad_singular_detailed(EndpointIntegrand(std::forward<F>(f)), a, b, tol).value;
  } else {
    auto g = [&f](double x, double, double) { return static_cast<double>(f(x)); };
    return quad_singular_detailed(EndpointIntegrand(g), a, b, tol, true).value;
  }
}

// Root of f in [a, b] with f(a), f(b) of opposite sign (or zero), to width.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double width = 1e-13);

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of a unimodal function on [a, b].
Extremum golden_maximize(const std::function<double(double)>& f, double a, double b,
                         double xtol = 1e-10);

}  // namespace cmc
