#include "cmc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmc/error.hpp"

namespace cmc {

namespace {

// Dormand-Prince 5(4) tableau, with the continuous extension coefficients of
// Hairer, Norsett & Wanner (dopri5).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

std::span<const double> OdeSolution::state(std::size_t i) const {
  if (i >= nodes_.size()) throw InvalidInputError("node index out of range");
  return {states_.data() + i * dim_, dim_};
}

std::size_t OdeSolution::locate(double t) const {
  const bool forward = nodes_.back() >= nodes_.front();
  const double lo = forward ? nodes_.front() : nodes_.back();
  const double hi = forward ? nodes_.back() : nodes_.front();
  const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
  if (!(t >= lo - slack && t <= hi + slack)) {
    std::ostringstream os;
    os << "t = " << t << " outside the integrated span [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
  std::size_t idx;
  if (forward) {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
    idx = static_cast<std::size_t>(it - nodes_.begin());
  } else {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t, std::greater<double>());
    idx = static_cast<std::size_t>(it - nodes_.begin());
  }
  if (idx == 0) idx = 1;
  if (idx >= nodes_.size()) idx = nodes_.size() - 1;
  return idx - 1;
}

double OdeSolution::component(double t, std::size_t k) const {
  if (k >= dim_) throw InvalidInputError("component index out of range");
  if (nodes_.size() == 1) return states_[k];
  const std::size_t i = locate(t);
  const double h = nodes_[i + 1] - nodes_[i];
  const double th = (t - nodes_[i]) / h;
  const double th1 = 1.0 - th;
  const double* r = dense_.data() + i * 5 * dim_;
  return r[k] + th * (r[dim_ + k] +
                      th1 * (r[2 * dim_ + k] + th * (r[3 * dim_ + k] + th1 * r[4 * dim_ + k])));
}

State OdeSolution::operator()(double t) const {
  State y(dim_);
  for (std::size_t k = 0; k < dim_; ++k) y[k] = component(t, k);
  return y;
}

OdeSolution integrate_ivp(const OdeSystem& system, const State& y0, Interval span,
                          const OdeOptions& options) {
  const std::size_t n = system.dimension;
  if (n == 0 || !system.rhs) throw InvalidInputError("empty ODE system");
  if (y0.size() != n) throw InvalidInputError("initial state has the wrong dimension");
  if (!std::isfinite(span.lo) || !std::isfinite(span.hi))
    throw InvalidInputError("integration span must be finite");
  if (!(options.rtol > 0.0) || !(options.atol >= 0.0))
    throw InvalidInputError("tolerances must be positive");
  for (double v : y0)
    if (!std::isfinite(v)) throw InvalidInputError("non-finite initial state");

  OdeSolution sol;
  sol.dim_ = n;
  const double t0 = span.lo, tend = span.hi;
  const double total = std::abs(tend - t0);
  const double dir = tend >= t0 ? 1.0 : -1.0;
  const double inv0 = system.invariant ? system.invariant(y0) : 0.0;

  sol.nodes_.push_back(t0);
  sol.states_.insert(sol.states_.end(), y0.begin(), y0.end());
  if (total == 0.0) return sol;

  std::size_t evals = 0;
  auto f = [&](double t, const State& y, State& out) {
    system.rhs(t, y, out);
    ++evals;
  };

  State y = y0, y1(n), ytmp(n), k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), err(n);
  double t = t0;
  f(t, y, k1);

  auto scale = [&](std::size_t, double a, double b) {
    return options.atol + options.rtol * std::max(std::abs(a), std::abs(b));
  };

  double h = std::abs(options.initial_step);
  if (h == 0.0) {
    double dnf = 0.0, dny = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = scale(i, y[i], y[i]);
      dnf += (k1[i] / sk) * (k1[i] / sk);
      dny += (y[i] / sk) * (y[i] / sk);
    }
    h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
    h = std::min(h, total);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + dir * h * k1[i];
    f(t + dir * h, ytmp, k2);
    double der2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = scale(i, y[i], y[i]);
      der2 += ((k2[i] - k1[i]) / sk) * ((k2[i] - k1[i]) / sk);
    }
    der2 = std::sqrt(der2) / h;
    const double der12 = std::max(der2, std::sqrt(dnf));
    const double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
    h = std::min({100.0 * h, h1, total});
  }
  h = std::min(h, total);

  const double beta = 0.04, expo1 = 0.2 - beta * 0.75, safe = 0.9;
  const double facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
  double facold = 1e-4;
  bool reject = false;
  std::size_t steps = 0;
  double drift = 0.0;

  while (true) {
    if (++steps > options.max_steps) {
      std::ostringstream os;
      os << "step budget exhausted at t = " << t;
      throw AccuracyError(os.str());
    }
    bool last = false;
    if (std::abs(tend - t) <= h * (1.0 + 1e-12)) {
      h = std::abs(tend - t);
      last = true;
    }
    if (h < 1e-14 * total) {
      std::ostringstream os;
      os << "step size underflow at t = " << t;
      throw StepUnderflowError(os.str(), t);
    }
    const double hs = dir * h;

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
    f(t + c2 * hs, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * hs, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * hs, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * hs, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] =
          y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const double tnew = last ? tend : t + hs;
    f(t + hs, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      y1[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                           a76 * k6[i]);
    f(tnew, y1, k7);

    double errsum = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      err[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                     e7 * k7[i]);
      const double sk = scale(i, y[i], y1[i]);
      errsum += (err[i] / sk) * (err[i] / sk);
      if (!std::isfinite(y1[i])) finite = false;
    }
    double errn = finite ? std::sqrt(errsum / static_cast<double>(n)) : 1e10;
    if (!std::isfinite(errn)) errn = 1e10;

    const double fac11 = std::pow(errn, expo1);
    double fac = fac11 / std::pow(facold, beta);
    fac = std::max(facc2, std::min(facc1, fac / safe));
    double hnew = h / fac;

    if (errn <= 1.0) {
      facold = std::max(errn, 1e-4);
      const std::size_t base = sol.dense_.size();
      sol.dense_.resize(base + 5 * n);
      double* r = sol.dense_.data() + base;
      for (std::size_t i = 0; i < n; ++i) {
        const double dy = y1[i] - y[i];
        const double bspl = hs * k1[i] - dy;
        r[i] = y[i];
        r[n + i] = dy;
        r[2 * n + i] = bspl;
        r[3 * n + i] = dy - hs * k7[i] - bspl;
        r[4 * n + i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                             d6 * k6[i] + d7 * k7[i]);
      }
      y.swap(y1);
      k1.swap(k7);
      t = tnew;
      sol.nodes_.push_back(t);
      sol.states_.insert(sol.states_.end(), y.begin(), y.end());
      if (system.invariant) drift = std::max(drift, std::abs(system.invariant(y) - inv0));
      if (last) break;
      if (reject) hnew = std::min(hnew, h);
      reject = false;
      h = std::min(hnew, std::abs(tend - t));
    } else {
      hnew = h / std::min(facc1, fac11 / safe);
      reject = true;
      h = hnew;
    }
  }
  sol.drift_ = drift;
  sol.evaluations_ = evals;
  return sol;
}

QuadResult quad_singular_detailed(const EndpointIntegrand& f, double a, double b, double tol,
                                  bool skip_endpoint_nodes) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw InvalidInputError("integration limits must be finite");
  if (!(tol > 0.0)) throw InvalidInputError("tolerance must be positive");
  QuadResult out;
  if (a == b) return out;
  if (b < a) {
    auto flipped = [&f](double x, double from_b, double to_a) { return f(x, to_a, from_b); };
    out = quad_singular_detailed(flipped, b, a, tol, skip_endpoint_nodes);
    out.value = -out.value;
    for (double& v : out.level_estimates) v = -v;
    return out;
  }

  constexpr double kTmax = 4.5;
  constexpr int kMaxLevel = 12;
  constexpr int kMinLevel = 3;
  const double half = 0.5 * (b - a);
  const double width = b - a;
  const double pi2 = 0.5 * std::numbers::pi;

  auto eval = [&](double x, double from_a, double to_b) {
    const double v = f(x, from_a, to_b);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "non-finite integrand at x = " << x;
      throw AccuracyError(os.str());
    }
    return v;
  };

  // Contribution of the node pair at +t and -t (t > 0).
  auto pair = [&](double t) {
    const double v = pi2 * std::sinh(t);
    const double q = std::exp(-2.0 * v);
    const double w = pi2 * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
    const double gap = half * 2.0 * q / (1.0 + q);
    if (gap == 0.0 || w == 0.0) return 0.0;
    double s = 0.0;
    const double xr = b - gap;
    if (!(skip_endpoint_nodes && xr >= b)) s += eval(xr, width - gap, gap);
    const double xl = a + gap;
    if (!(skip_endpoint_nodes && xl <= a)) s += eval(xl, gap, width - gap);
    return w * s;
  };

  double h = 1.0;
  double sum = pi2 * eval(0.5 * (a + b), half, half);
  for (int j = 1; j * h <= kTmax; ++j) sum += pair(j * h);
  double estimate = half * h * sum;
  out.level_estimates.push_back(estimate);

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    for (int j = 1; j * h <= kTmax; j += 2) fresh += pair(j * h);
    sum += fresh;
    const double next = half * h * sum;
    out.level_estimates.push_back(next);
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= kMinLevel && diff <= tol * std::max(1.0, std::abs(next))) {
      out.value = next;
      out.error_estimate = diff;
      out.levels = level;
      return out;
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << "quadrature did not converge: last levels " << out.level_estimates.rbegin()[1]
     << " and " << out.level_estimates.back();
  throw AccuracyError(os.str());
}

double bisect_root(const std::function<double(double)>& f, double a, double b, double width) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!std::isfinite(fa) || !std::isfinite(fb) || (fa > 0.0) == (fb > 0.0))
    throw NoSolutionError("root is not bracketed");
  for (int it = 0; it < 400 && std::abs(b - a) > width; ++it) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

Extremum golden_maximize(const std::function<double(double)>& f, double a, double b,
                         double xtol) {
  if (!(b > a)) throw InvalidInputError("golden search needs a < b");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  Extremum best = f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
  for (double x : {a, b}) {
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

}  // namespace cmc
