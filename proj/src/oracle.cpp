#include "cktomo/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace cktomo {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat, the embedded error weights (bhat1 = 5179/57600 etc).
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600;
constexpr double e3 = 500.0 / 1113 - 7571.0 / 16695;
constexpr double e4 = 125.0 / 192 - 393.0 / 640;
constexpr double e5 = -2187.0 / 6784 + 92097.0 / 339200;
constexpr double e6 = 11.0 / 84 - 187.0 / 2100;
constexpr double e7 = -1.0 / 40;

using State = std::array<double, 4>;  // (Re eps, Im eps, Re eps', Im eps')

struct Rhs {
  double two_gamma;
  double omega0_sq;

  State operator()(const State& y) const {
    return {y[2], y[3], -two_gamma * y[2] - omega0_sq * y[0],
            -two_gamma * y[3] - omega0_sq * y[1]};
  }
};

State axpy(const State& y, double h, const State& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

// Advances y from t0 to t1 (either direction) with adaptive step control.
void integrate_segment(const Rhs& rhs, State& y, double t0, double t1,
                       const IntegratorConfig& cfg) {
  if (t1 == t0) return;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double h = dir * std::min(span, 0.05);
  if (cfg.max_step > 0.0) h = dir * std::min(std::abs(h), cfg.max_step);

  double t = t0;
  State k1 = rhs(y);
  long steps = 0;
  while (dir * (t1 - t) > 0.0) {
    if (++steps > 50'000'000) throw IntegrationError("step limit exceeded");
    const double h_floor = 16.0 * std::numeric_limits<double>::epsilon() *
                           std::max({std::abs(t), std::abs(t1), 1.0});
    // A remaining span below the resolution floor (a grid point one ulp past
    // a kick) gets one forced micro-step; its truncation error is O(h^5).
    const bool sliver = std::abs(t1 - t) <= h_floor;
    if (sliver) {
      h = t1 - t;
    } else {
      if (dir * (t + h - t1) > 0.0) h = t1 - t;
      if (std::abs(h) < h_floor) throw IntegrationError("step size underflow");
    }

    const State k2 = rhs(axpy(y, h * a21, k1));
    State tmp = y;
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const State k3 = rhs(tmp);
    for (int i = 0; i < 4; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const State k4 = rhs(tmp);
    for (int i = 0; i < 4; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const State k5 = rhs(tmp);
    for (int i = 0; i < 4; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                           a65 * k5[i]);
    const State k6 = rhs(tmp);
    State ynew;
    for (int i = 0; i < 4; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
    const State k7 = rhs(ynew);  // FSAL

    double err_sq = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc =
          cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err_sq += (e / sc) * (e / sc);
    }
    const double err = std::sqrt(err_sq / 4.0);

    if (err <= 1.0 || sliver) {
      t = sliver ? t1 : t + h;
      y = ynew;
      k1 = k7;
      double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      fac = std::clamp(fac, 0.2, 5.0);
      h *= fac;
    } else {
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
    }
    if (cfg.max_step > 0.0 && std::abs(h) > cfg.max_step) h = dir * cfg.max_step;
  }
}

TrajectoryPoint to_point(const State& y, double t) {
  return {t, {y[0], y[1]}, {y[2], y[3]}};
}

}  // namespace

std::vector<TrajectoryPoint> integrate_ode_series(const OscillatorParams& params,
                                                  std::span<const double> t_grid,
                                                  const IntegratorConfig& config) {
  if (!(config.rel_tol > 0.0) || !(config.abs_tol > 0.0))
    throw std::invalid_argument("integrator tolerances must be > 0");
  if (config.max_step < 0.0 || !std::isfinite(config.max_step))
    throw std::invalid_argument("max_step must be finite and >= 0");
  classify_regime(params);  // validates, rejects critical damping
  const double omega = effective_frequency(params);
  const Rhs rhs{2.0 * params.gamma, params.omega0 * params.omega0};
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i])) throw std::invalid_argument("t_grid must be finite");
    if (i > 0 && t_grid[i] < t_grid[i - 1])
      throw std::invalid_argument("t_grid must be sorted ascending");
  }

  std::vector<TrajectoryPoint> out(t_grid.size());
  const State init{1.0, 0.0, 0.0, omega};

  // Backward pass: no kick lies at negative time.
  {
    State y = init;
    double cur = 0.0;
    for (std::size_t i = t_grid.size(); i-- > 0;) {
      if (t_grid[i] >= 0.0) continue;
      integrate_segment(rhs, y, cur, t_grid[i], config);
      cur = t_grid[i];
      out[i] = to_point(y, cur);
    }
  }

  // Forward pass, applying every kick tau < target exactly once.
  {
    State y = init;
    double cur = 0.0;
    std::size_t next_kick = 0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      const double target = t_grid[i];
      if (target < 0.0) continue;
      while (next_kick < params.kick_times.size() &&
             params.kick_times[next_kick] < target) {
        const double tau = params.kick_times[next_kick];
        integrate_segment(rhs, y, cur, tau, config);
        y[2] += 2.0 * params.kappa * y[0];
        y[3] += 2.0 * params.kappa * y[1];
        cur = tau;
        ++next_kick;
      }
      integrate_segment(rhs, y, cur, target, config);
      cur = target;
      out[i] = to_point(y, cur);
    }
  }
  return out;
}

TrajectoryPoint integrate_ode(const OscillatorParams& params, double t_end,
                              const IntegratorConfig& config) {
  if (!std::isfinite(t_end)) throw std::invalid_argument("t_end must be finite");
  const double grid[1] = {t_end};
  return integrate_ode_series(params, grid, config)[0];
}

Minimum minimize_k2_numeric(const OscillatorParams& params, double t_lo, double t_hi) {
  if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || !(t_lo < t_hi))
    throw std::invalid_argument("need finite t_lo < t_hi");

  const TrajectoryEvaluator eval(params);
  const auto k2 = [&eval](double t) { return std::norm(eval(t).eps); };

  constexpr int kScan = 1024;  // >= 512 per the coarse-scan contract
  int best = 0;
  double best_val = k2(t_lo);
  for (int i = 1; i <= kScan; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / kScan;
    const double v = k2(t);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const auto grid_t = [&](int i) { return t_lo + (t_hi - t_lo) * i / kScan; };
  double a = grid_t(std::max(0, best - 1));
  double b = grid_t(std::min(kScan, best + 1));

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = k2(c);
  double fd = k2(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = k2(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = k2(d);
    }
  }
  const double tm = 0.5 * (a + b);
  const double fm = k2(tm);
  Minimum result{tm, fm};
  if (best_val < result.value) result = {grid_t(best), best_val};
  if (fc < result.value) result = {c, fc};
  if (fd < result.value) result = {d, fd};
  return result;
}

}  // namespace cktomo
