#pragma once

/*
 * Numerical cross-checks for the closed-form machinery: an adaptive embedded
 * Runge-Kutta 4(5) integrator for the trajectory ODE (kicks applied as exact
 * jump events, never as mollified delta functions), adaptive quadrature, and
 * a grid-scan + golden-section minimiser for the squeezing coefficient.
 */

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "cktomo/params.hpp"
#include "cktomo/trajectory.hpp"

namespace cktomo {

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 means unlimited
};

// Integrates the complex ODE as a 4-dimensional real first-order system from
// the initial conditions at t = 0 to t_end (backwards for t_end < 0).  Kicks
// tau with 0 <= tau < t_end are applied as instantaneous eps' += 2*kappa*eps,
// matching the closed-form branch convention.
TrajectoryPoint integrate_ode(const OscillatorParams& params, double t_end,
                              const IntegratorConfig& config = {});

// One continued integration pass over a sorted grid (cheaper than restarting
// per point).  Negative grid points are handled by a separate backward pass.
std::vector<TrajectoryPoint> integrate_ode_series(const OscillatorParams& params,
                                                  std::span<const double> t_grid,
                                                  const IntegratorConfig& config = {});

struct Minimum {
  double t = 0.0;
  double value = 0.0;
};

// Global minimum of the squeezing coefficient k^2(t) = |eps(t)|^2 on
// [t_lo, t_hi]: coarse scan over >= 512 points, then golden-section
// refinement of the bracketing interval down to |dt| < 1e-10.
Minimum minimize_k2_numeric(const OscillatorParams& params, double t_lo, double t_hi);

namespace detail {

template <class F>
double adapt_simpson(F& f, double a, double fa, double b, double fb, double m,
                     double fm, double whole, double tol, int depth, long& evals) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  if (evals > 20'000'000)
    throw QuadratureError("quadrature failed to converge: evaluation budget exhausted");
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) <= 1e-14 * (std::abs(a) + std::abs(b)))
    return left + right + delta / 15.0;
  if (depth <= 0)
    throw QuadratureError("quadrature failed to converge: recursion depth exhausted");
  return adapt_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, evals) +
         adapt_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, evals);
}

}  // namespace detail

// Adaptive Simpson integration of f over [a, b] to relative tolerance
// rel_tol (relative to a first coarse estimate of the integral).  Throws
// QuadratureError when the error control cannot be met.
template <class F>
double quadrature(F&& f, double a, double b, double rel_tol) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("quadrature bounds must be finite");
  if (!(rel_tol > 0.0))
    throw std::invalid_argument("quadrature tolerance must be > 0");
  if (a == b) return 0.0;

  // Coarse pre-split sets the absolute budget and guards against symmetric
  // cancellation fooling a single top-level estimate.
  constexpr int kPanels = 16;
  const double h = (b - a) / kPanels;
  double fs[kPanels + 1];
  double fmids[kPanels];
  double coarse = 0.0;
  long evals = 0;
  for (int i = 0; i <= kPanels; ++i) fs[i] = f(a + h * i);
  for (int i = 0; i < kPanels; ++i) {
    fmids[i] = f(a + h * (i + 0.5));
    coarse += h / 6.0 * (fs[i] + 4.0 * fmids[i] + fs[i + 1]);
  }
  evals += 2 * kPanels + 1;

  const double scale = std::max(std::abs(coarse), 1e-12);
  const double tol_panel = rel_tol * scale / (2.0 * kPanels);
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double pa = a + h * i;
    const double pb = a + h * (i + 1);
    const double pm = pa + 0.5 * h;
    const double whole = h / 6.0 * (fs[i] + 4.0 * fmids[i] + fs[i + 1]);
    total += detail::adapt_simpson(f, pa, fs[i], pb, fs[i + 1], pm, fmids[i], whole,
                                   tol_panel, 48, evals);
  }
  return total;
}

}  // namespace cktomo
