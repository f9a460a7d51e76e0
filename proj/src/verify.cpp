#include "cktomo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cktomo/kernels.hpp"
#include "cktomo/moments.hpp"
#include "cktomo/oracle.hpp"
#include "cktomo/tomography.hpp"

namespace cktomo {
namespace {

constexpr double kMachEps = 2.220446049250313e-16;
constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> pts(static_cast<std::size_t>(n));
  if (n == 1) {
    pts[0] = lo;
    return pts;
  }
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = lo + h * i;
  pts.back() = hi;
  return pts;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string param_label(const OscillatorParams& p) {
  std::ostringstream os;
  os << regime_name(classify_regime(p)) << " omega0=" << fmt(p.omega0)
     << " gamma=" << fmt(p.gamma) << " kappa=" << fmt(p.kappa);
  if (p.kick_times.size() != 1 || p.kick_times.front() != 0.0) {
    os << " kicks=";
    for (std::size_t i = 0; i < p.kick_times.size(); ++i) {
      if (i > 0) os << ',';
      os << fmt(p.kick_times[i]);
    }
  }
  return os.str();
}

CheckResult result(std::string name, std::string subject, double defect, double tol,
                   std::string note = "") {
  CheckResult r;
  r.name = std::move(name);
  r.subject = std::move(subject);
  r.defect = defect;
  r.tolerance = tol;
  r.passed = defect <= tol;
  r.note = std::move(note);
  return r;
}

bool single_kick_at_zero(const OscillatorParams& p) {
  return p.kick_times.size() == 1 && p.kick_times.front() == 0.0;
}

double time_horizon(const OscillatorParams& p) {
  return p.kick_times.empty() ? 10.0 : std::max(10.0, p.kick_times.back() + 2.0);
}

std::string window_note(int checked, int total) {
  std::ostringstream os;
  os << "checked " << checked << "/" << total << " points (roundoff window)";
  return os.str();
}

void append_trajectory_checks(const OscillatorParams& p, const std::string& subj,
                              std::vector<CheckResult>& out) {
  const double horizon = time_horizon(p);
  const double gamma = p.gamma;
  const double omega = effective_frequency(p);

  {  // closed form against the adaptive integrator, both directions in time
    const std::vector<double> grid = linspace(-2.0, horizon, 121);
    const std::vector<TrajectoryPoint> closed = serial::trajectory_series(p, grid);
    const std::vector<TrajectoryPoint> ode =
        integrate_ode_series(p, grid, {1e-10, 1e-12, 0.0});
    double defect = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double de = std::abs(closed[i].eps - ode[i].eps) /
                        std::max(1.0, std::abs(closed[i].eps));
      const double dd = std::abs(closed[i].eps_dot - ode[i].eps_dot) /
                        std::max(1.0, std::abs(closed[i].eps_dot));
      defect = std::max(defect, std::max(de, dd));
    }
    out.push_back(result("closed form matches integrator", subj, defect, 1e-7));
  }

  {  // Wronskian conservation, closed form
    const std::vector<double> grid = linspace(-1.0, horizon, 241);
    const TrajectoryEvaluator eval(p);
    const std::complex<double> target(0.0, 2.0 * omega);
    const double tol = 1e-9;
    double defect = 0.0;
    int checked = 0;
    for (double t : grid) {
      const TrajectoryPoint point = eval(t);
      if (wronskian_noise_floor(point, gamma, kClosedFormRel) > 0.25 * tol) continue;
      defect = std::max(defect, std::abs(wronskian(point, gamma) - target));
      ++checked;
    }
    out.push_back(result("wronskian conserved (closed form)", subj, defect, tol,
                         window_note(checked, static_cast<int>(grid.size()))));
  }

  {  // Wronskian conservation along the integrated trajectory
    const std::vector<double> grid = linspace(-1.0, horizon, 56);
    const IntegratorConfig cfg{1e-12, 1e-14, 0.0};
    const std::vector<TrajectoryPoint> ode = integrate_ode_series(p, grid, cfg);
    const std::complex<double> target(0.0, 2.0 * omega);
    const double rel = oracle_rel(cfg.rel_tol);
    const double abs_err = 256.0 * cfg.abs_tol;
    const double tol = 1e-7;
    double defect = 0.0;
    int checked = 0;
    for (const TrajectoryPoint& point : ode) {
      if (wronskian_noise_floor(point, gamma, rel, abs_err) > 0.25 * tol) continue;
      defect = std::max(defect, std::abs(wronskian(point, gamma) - target));
      ++checked;
    }
    out.push_back(result("wronskian conserved (integrator)", subj, defect, tol,
                         window_note(checked, static_cast<int>(grid.size()))));
  }

  {  // transfer matrix algebra
    const TransferMatrix m = transfer_matrix(p);
    out.push_back(result("transfer matrix unimodular", subj, std::abs(m.det() - 1.0), 1e-14));

    OscillatorParams quiet = p;
    quiet.kappa = 0.0;
    const TransferMatrix id = transfer_matrix(quiet);
    const double defect =
        std::max({std::abs(id.m00 - 1.0), std::abs(id.m01), std::abs(id.m10),
                  std::abs(id.m11 - 1.0)});
    out.push_back(result("zero-strength kick is the identity map", subj, defect, 0.0));
  }

  const ModeBasis basis = mode_basis(p);
  const std::vector<TrajectoryBranch> branches = trajectory_branches(p);

  if (single_kick_at_zero(p)) {  // coefficient-space propagation vs branch table
    const ModeCoefficients mapped = transfer_matrix(p).apply(branches.front().coeffs);
    const ModeCoefficients direct = branches.back().coeffs;
    const double scale = std::max({1.0, std::abs(direct.a), std::abs(direct.b)});
    const double defect =
        std::max(std::abs(mapped.a - direct.a), std::abs(mapped.b - direct.b)) / scale;
    out.push_back(result("transfer map reproduces branch coefficients", subj, defect, 1e-12));
  }

  {  // continuity of eps and the exact derivative jump at every kick
    double defect = 0.0;
    for (std::size_t k = 0; k < p.kick_times.size(); ++k) {
      const double tau = p.kick_times[k];
      const TrajectoryPoint before = evaluate_mode(branches[k].coeffs, basis, tau);
      const TrajectoryPoint after = evaluate_mode(branches[k + 1].coeffs, basis, tau);
      const double c1 = std::abs(after.eps - before.eps) / std::max(1.0, std::abs(before.eps));
      const double jump_scale =
          std::max(1.0, std::abs(before.eps_dot) + 2.0 * std::abs(p.kappa * before.eps));
      const double c2 =
          std::abs(after.eps_dot - before.eps_dot - 2.0 * p.kappa * before.eps) / jump_scale;
      defect = std::max(defect, std::max(c1, c2));
    }
    out.push_back(result("kick continuity and derivative jump", subj, defect, 1e-12));
  }
}

void append_moment_checks(const OscillatorParams& p, std::complex<double> alpha,
                          const std::string& subj, std::vector<CheckResult>& out) {
  const double horizon = time_horizon(p);
  const double gamma = p.gamma;
  const double omega = effective_frequency(p);
  const Regime regime = classify_regime(p);

  const std::vector<double> grid = linspace(0.0, horizon, 201);
  const std::vector<MomentSample> samples = serial::moment_series(p, alpha, grid);

  {  // uncertainty saturation with a dynamic-range guard on the product
    const double tol = 1e-10;
    double defect = 0.0;
    int checked = 0;
    for (const MomentSample& s : samples) {
      const double product = s.second.sigma_qq * s.second.sigma_pp;
      const double floor = 32.0 * (1.0 + 2.0 * gamma * s.t) * kMachEps * product;
      if (floor > 0.25 * tol) continue;
      defect = std::max(defect, std::abs(s.uncertainty_defect));
      ++checked;
    }
    out.push_back(result("uncertainty product saturates at 1/4", subj, defect, tol,
                         window_note(checked, static_cast<int>(grid.size()))));
  }

  {  // |sigma_qp| against the explicit radicand form
    const double tol = 1e-10;
    double defect = 0.0;
    int checked = 0;
    for (const MomentSample& s : samples) {
      const double radicand = 4.0 * s.second.sigma_qq * s.second.sigma_pp - 1.0;
      if (radicand < 0.0) continue;
      const double root = 0.5 * std::sqrt(radicand);
      // Roundoff delta on the radicand propagates as delta/(8 root); near the
      // zero crossing the root itself saturates at sqrt(delta)/2.
      const double delta = 32.0 * (1.0 + 2.0 * gamma * s.t) * kMachEps *
                           std::max(4.0 * s.second.sigma_qq * s.second.sigma_pp, 1.0);
      const double floor = delta / (4.0 * root + std::sqrt(delta));
      if (floor > 0.25 * tol) continue;
      defect = std::max(defect, std::abs(std::abs(s.second.sigma_qp) - root));
      ++checked;
    }
    out.push_back(result("covariance magnitude matches radicand form", subj, defect, tol,
                         window_note(checked, static_cast<int>(grid.size()))));
  }

  {  // centroid flow: d<q>/dt = exp(-2 gamma t) <p>
    const TrajectoryEvaluator eval(p);
    const double h = 1e-5;
    double defect = 0.0;
    for (double t : linspace(0.05, horizon - 0.05, 40)) {
      bool near_kick = false;
      for (double tau : p.kick_times)
        if (std::abs(t - tau) <= 10.0 * h) near_kick = true;
      if (near_kick) continue;
      const double qp = first_moments(eval(t + h), alpha, gamma).mean_q;
      const double qm = first_moments(eval(t - h), alpha, gamma).mean_q;
      const double rhs = std::exp(-2.0 * gamma * t) * first_moments(eval(t), alpha, gamma).mean_p;
      defect = std::max(defect, std::abs((qp - qm) / (2.0 * h) - rhs) / std::max(1.0, std::abs(rhs)));
    }
    out.push_back(result("centroids follow the classical flow", subj, defect, 1e-5));
  }

  if (single_kick_at_zero(p)) {  // closed-form dispersion / squeezing identities
    const TrajectoryEvaluator eval(p);
    double defect = 0.0;
    for (double t : linspace(0.0, 10.0, 1001)) {
      const TrajectoryPoint point = eval(t);
      double closed = 0.0;
      double direct = 0.0;
      switch (regime) {
        case Regime::WeakDamping:
          closed = dispersion_weak_closed(p, t);
          direct = 0.5 * std::norm(point.eps);
          break;
        case Regime::StrongDamping:
          closed = dispersion_strong_closed(p, t);
          direct = 0.5 * std::norm(point.eps);
          break;
        case Regime::FreeParticle:
          closed = k2_free_closed(p, t);
          direct = std::norm(point.eps);
          break;
      }
      defect = std::max(defect, std::abs(closed - direct) / std::max(1.0, std::abs(direct)));
    }
    out.push_back(result("closed-form dispersion matches trajectory", subj, defect, 1e-12));

    if (regime == Regime::StrongDamping && 2.0 * p.kappa + gamma >= 0.0) {
      const double s = (2.0 * p.kappa + gamma) / omega;
      double min_bracket = std::numeric_limits<double>::infinity();
      for (double t : linspace(0.0, 10.0, 2001)) {
        const double c = std::cosh(2.0 * omega * t);
        const double bracket = c + 0.5 * s * s * (c - 1.0) + s * std::sinh(2.0 * omega * t);
        min_bracket = std::min(min_bracket, bracket);
      }
      out.push_back(result("strong-damping dispersion bracket stays above one", subj,
                           std::max(0.0, 1.0 - min_bracket), 1e-12));
    }
    if (regime == Regime::FreeParticle && p.kappa > 0.0) {
      double min_k2 = std::numeric_limits<double>::infinity();
      for (double t : linspace(0.01, 10.0, 2001))
        min_k2 = std::min(min_k2, k2_free_closed(p, t));
      CheckResult r;
      r.name = "free-particle squeezing absent";
      r.subject = subj;
      r.defect = std::max(0.0, 1.0 - min_k2);
      r.tolerance = 0.0;
      r.passed = min_k2 > 1.0;
      r.note = "min k2 = " + fmt(min_k2);
      out.push_back(std::move(r));
    }
  }
}

void append_tomography_checks(const OscillatorParams& p, std::complex<double> alpha,
                              double tomo_time, std::span<const FrameParams> frames,
                              const std::string& subj, std::vector<CheckResult>& out) {
  const StateMoments sm = state_moments(p, alpha, tomo_time);

  {  // every requested row integrates to one
    const std::vector<double> defects = serial::row_normalization_defects(sm, frames);
    const double defect = defects.empty() ? 0.0 : *std::max_element(defects.begin(), defects.end());
    out.push_back(result("tomogram rows integrate to one", subj, defect, 1e-6));
  }

  {  // pointwise nonnegativity on a representative grid
    const std::vector<double> xs = linspace(-8.0, 8.0, 101);
    const TomogramGrid grid = serial::tomogram_grid(sm, frames, xs);
    double min_value = std::numeric_limits<double>::infinity();
    for (double v : grid.values) min_value = std::min(min_value, v);
    out.push_back(result("tomogram values nonnegative", subj, std::max(0.0, -min_value), 0.0));
  }

  {  // scaling homogeneity
    const FrameParams test_frames[] = {{1.0, 0.0}, {0.6, -0.8}, {std::cos(1.0), std::sin(1.0)}};
    const double lambdas[] = {0.5, -1.3, 2.0, 7.5};
    const double xs[] = {0.3, -1.1};
    double defect = 0.0;
    for (const FrameParams& f : test_frames)
      for (double lam : lambdas)
        for (double x : xs)
          defect = std::max(defect, homogeneity_check(sm, f, lam, x));
    out.push_back(result("tomogram scaling homogeneity", subj, defect, 1e-12));
  }

  {  // optical tomogram is the symplectic slice at (cos, sin)
    double defect = 0.0;
    for (double theta : linspace(0.0, kPi, 16))
      for (double x : {-1.0, 0.7}) {
        const double opt = optical_tomogram(sm, {theta}, x);
        const double sym = tomogram_value(slice(sm, {std::cos(theta), std::sin(theta)}), x);
        defect = std::max(defect, std::abs(opt - sym));
      }
    out.push_back(result("optical tomogram equals symplectic slice", subj, defect, 1e-15));
  }

  {  // entropic inequality over a 64-point angle grid (analytic entropies)
    double min_margin = std::numeric_limits<double>::infinity();
    const double bound = std::log(kPi) + 1.0;
    for (int k = 0; k < 64; ++k) {
      const double theta = kPi * k / 64.0;
      const double v1 = slice(sm, {std::cos(theta), std::sin(theta)}).variance;
      const double v2 =
          slice(sm, {std::cos(theta + kPi / 2.0), std::sin(theta + kPi / 2.0)}).variance;
      const double sum = 0.5 * (std::log(2.0 * kPi * v1) + 1.0) +
                         0.5 * (std::log(2.0 * kPi * v2) + 1.0);
      min_margin = std::min(min_margin, sum - bound);
    }
    out.push_back(result("entropic inequality on angle grid", subj,
                         std::max(0.0, -min_margin), 1e-9,
                         "min margin = " + fmt(min_margin)));
  }

  {  // analytic entropy against the quadrature route
    double defect = 0.0;
    for (double theta : {0.0, 0.4, kPi / 4.0, 1.1})
      defect = std::max(defect, entropic_check(sm, {theta}).quadrature_defect);
    out.push_back(result("entropy quadrature agreement", subj, defect, 1e-7));
  }
}

void append_param_checks(const OscillatorParams& p, std::complex<double> alpha,
                         double tomo_time, std::span<const FrameParams> frames,
                         std::vector<CheckResult>& out) {
  const std::string subj = param_label(p);
  append_trajectory_checks(p, subj, out);
  append_moment_checks(p, alpha, subj, out);
  append_tomography_checks(p, alpha, tomo_time, frames, subj, out);
}

void append_global_checks(std::vector<CheckResult>& out) {
  {  // undamped single-kick squeezing floor: k2_min = 3 - 2 sqrt(2)
    const OscillatorParams p{1.0, 0.0, 1.0, {0.0}};
    const Minimum m = minimize_k2_numeric(p, 0.0, kPi);
    const double exact = 3.0 - 2.0 * std::numbers::sqrt2;
    out.push_back(result("undamped kick squeezing minimum", "omega0=1 kappa=1",
                         std::abs(m.value - exact), 1e-9, "t_min = " + fmt(m.t)));
  }

  {  // squeezing stays reachable at gamma = 0.5
    CheckResult r;
    r.name = "squeezing reachable under damping";
    r.subject = "weak-damping omega0=1 gamma=0.5";
    r.tolerance = 1.0;
    r.passed = false;
    const double omega = std::sqrt(1.0 - 0.25);
    for (int kappa = 1; kappa <= 10; ++kappa) {
      OscillatorParams p{1.0, 0.5, static_cast<double>(kappa), {0.0}};
      const Minimum m = minimize_k2_numeric(p, 0.0, kPi / omega);
      if (m.value < 1.0) {
        r.defect = m.value;
        r.passed = true;
        r.note = "kappa = " + fmt(kappa) + " gives k2_min = " + fmt(m.value) +
                 " at t = " + fmt(m.t);
        break;
      }
      r.defect = m.value;
    }
    if (!r.passed) r.note = "no kappa <= 10 squeezes";
    out.push_back(std::move(r));
  }

  {  // strong-damping no-squeezing claim at the documented parameter set
    const double gamma = 2.0;
    const double omega0 = 0.5;
    const double omega = std::sqrt(gamma * gamma - omega0 * omega0);
    double worst = 0.0;
    for (double kappa : {0.5, 1.0, 2.0}) {
      const double s = (2.0 * kappa + gamma) / omega;
      for (double t : linspace(0.0, 10.0, 10000)) {
        const double c = std::cosh(2.0 * omega * t);
        const double bracket = c + 0.5 * s * s * (c - 1.0) + s * std::sinh(2.0 * omega * t);
        worst = std::max(worst, 1.0 - bracket);
      }
    }
    out.push_back(result("strong-damping bracket never squeezes",
                         "omega0=0.5 gamma=2 kappa=0.5,1,2", std::max(0.0, worst), 1e-12));
  }

  {  // free-particle no-squeezing claim
    double min_k2 = std::numeric_limits<double>::infinity();
    for (double gamma : {0.2, 1.0})
      for (double kappa : {0.5, 2.0}) {
        const OscillatorParams p{0.0, gamma, kappa, {0.0}};
        for (double t : linspace(1e-3, 10.0, 10000))
          min_k2 = std::min(min_k2, k2_free_closed(p, t));
      }
    CheckResult r;
    r.name = "free-particle dispersion never squeezes";
    r.subject = "gamma=0.2,1 kappa=0.5,2";
    r.defect = std::max(0.0, 1.0 - min_k2);
    r.tolerance = 0.0;
    r.passed = min_k2 > 1.0;
    r.note = "min k2 = " + fmt(min_k2);
    out.push_back(std::move(r));
  }

  {  // several kicks propagated in coefficient space against the integrator
    const OscillatorParams p{1.0, 0.2, 0.7, {0.0, 1.3, 2.9}};
    const std::vector<double> grid = linspace(0.0, 4.0, 81);
    const std::vector<TrajectoryPoint> closed = serial::trajectory_series(p, grid);
    const std::vector<TrajectoryPoint> ode = integrate_ode_series(p, grid, {1e-10, 1e-12, 0.0});
    double defect = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      defect = std::max(defect, std::abs(closed[i].eps - ode[i].eps) /
                                    std::max(1.0, std::abs(closed[i].eps)));
      defect = std::max(defect, std::abs(closed[i].eps_dot - ode[i].eps_dot) /
                                    std::max(1.0, std::abs(closed[i].eps_dot)));
    }
    out.push_back(result("multi-kick propagation matches integrator",
                         param_label(p), defect, 1e-7));
  }

  {  // integrator order: tightening tolerances shrinks the defect monotonically
    const OscillatorParams sets[] = {{1.0, 0.2, 1.0, {0.0}},
                                     {0.5, 2.0, 0.5, {0.0}},
                                     {0.0, 0.5, 1.0, {0.0}}};
    bool monotone = true;
    double last_defect = 0.0;
    std::ostringstream chain;
    for (const OscillatorParams& p : sets) {
      const TrajectoryPoint closed = epsilon_closed(p, 5.0);
      double prev = std::numeric_limits<double>::infinity();
      chain << (chain.tellp() > 0 ? "; " : "") << regime_name(classify_regime(p)) << ":";
      for (double tol : {1e-6, 1e-8, 1e-10}) {
        const TrajectoryPoint ode = integrate_ode(p, 5.0, {tol, tol * 1e-2, 0.0});
        const double d = std::abs(ode.eps - closed.eps);
        chain << ' ' << fmt(d);
        if (d >= prev) monotone = false;
        prev = d;
      }
      last_defect = std::max(last_defect, prev);
    }
    CheckResult r;
    r.name = "integrator defect shrinks with tolerance";
    r.subject = "three regimes, t = 5";
    r.defect = last_defect;
    r.tolerance = 1e-7;
    r.passed = monotone && last_defect <= 1e-7;
    r.note = chain.str();
    out.push_back(std::move(r));
  }

  {  // quadrature fixed points
    const double d1 = std::abs(quadrature([](double t) { return std::sin(t); }, 0.0, kPi, 1e-12) - 2.0) / 2.0;
    const double e1 = std::numbers::e - 1.0;
    const double d2 = std::abs(quadrature([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-12) - e1) / e1;
    const double sigma = 1.7;
    const double d3 = std::abs(quadrature(
                          [sigma](double x) {
                            return std::exp(-0.5 * x * x / (sigma * sigma)) /
                                   (sigma * std::sqrt(2.0 * kPi));
                          },
                          -8.0 * sigma, 8.0 * sigma, 1e-12) - 1.0);
    out.push_back(result("quadrature reproduces reference integrals", "sin, exp, normal density",
                         std::max({d1, d2, d3}), 1e-10));
  }

  {  // entropy equality at the initial coherent state
    const OscillatorParams p{1.0, 0.0, 0.0, {0.0}};
    const StateMoments sm = state_moments(p, {1.0, 0.5}, 0.0);
    double defect = 0.0;
    for (double theta : {0.0, 0.35, kPi / 4.0, 1.2}) {
      const EntropicCheck ec = entropic_check(sm, {theta});
      defect = std::max(defect, std::abs(ec.sum - ec.bound));
    }
    out.push_back(result("entropy equality at the coherent state", "omega0=1 gamma=0 kappa=0",
                         defect, 1e-12));
  }

  {  // minimiser never sits above sampled values
    const OscillatorParams p{1.0, 0.0, 1.0, {0.0}};
    const Minimum m = minimize_k2_numeric(p, 0.0, kPi);
    const TrajectoryEvaluator eval(p);
    std::mt19937_64 rng(7ull);
    std::uniform_real_distribution<double> u(0.0, kPi);
    double min_sample = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i)
      min_sample = std::min(min_sample, std::norm(eval(u(rng)).eps));
    out.push_back(result("minimiser below all sampled values", "omega0=1 kappa=1",
                         std::max(0.0, m.value - min_sample), 1e-12));
  }

  {  // analytic transfer map against integration straight across the kick
    const OscillatorParams sets[] = {{1.0, 0.2, 1.0, {0.0}},
                                     {0.5, 2.0, 0.5, {0.0}},
                                     {0.0, 0.5, 1.0, {0.0}}};
    double defect = 0.0;
    for (const OscillatorParams& p : sets) {
      const ModeBasis basis = mode_basis(p);
      const ModeCoefficients pre = trajectory_branches(p).front().coeffs;
      const TrajectoryPoint mapped = evaluate_mode(transfer_matrix(p).apply(pre), basis, 0.7);
      const TrajectoryPoint ode = integrate_ode(p, 0.7, {1e-10, 1e-12, 0.0});
      defect = std::max(defect, std::abs(mapped.eps - ode.eps));
      defect = std::max(defect, std::abs(mapped.eps_dot - ode.eps_dot));
    }
    out.push_back(result("transfer map matches integration across the kick",
                         "three regimes, t = 0.7", defect, 1e-8));
  }
}

std::vector<FrameParams> default_frames() {
  std::vector<FrameParams> frames;
  for (int k = 0; k < 8; ++k) {
    const double theta = kPi * k / 8.0;
    frames.push_back({std::cos(theta), std::sin(theta)});
  }
  return frames;
}

}  // namespace

OscillatorParams sample_params(Regime regime, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  OscillatorParams p;
  p.kick_times = {0.0};
  p.kappa = -2.0 + 4.0 * u01(rng);
  switch (regime) {
    case Regime::WeakDamping:
      p.omega0 = 0.5 + 1.5 * u01(rng);
      p.gamma = 0.9 * p.omega0 * u01(rng);
      break;
    case Regime::StrongDamping:
      p.omega0 = 0.5 + 1.5 * u01(rng);
      p.gamma = 1.1 * p.omega0 + (5.0 - 1.1 * p.omega0) * u01(rng);
      break;
    case Regime::FreeParticle:
      p.omega0 = 0.0;
      p.gamma = 0.1 + 2.9 * u01(rng);
      break;
  }
  return p;
}

double wronskian_noise_floor(const TrajectoryPoint& point, double gamma, double rel,
                             double abs_err) {
  const double scale = std::exp(2.0 * gamma * point.t);
  const double ae = std::abs(point.eps);
  const double ad = std::abs(point.eps_dot);
  return rel * (2.0 * scale * ae * ad + 1.0) + abs_err * (scale * (ae + ad) + 1.0);
}

std::vector<CheckResult> run_scenario_checks(const Scenario& scenario) {
  std::vector<CheckResult> out;
  append_param_checks(scenario.params, scenario.alpha, scenario.tomogram_time,
                      scenario.frames, out);
  return out;
}

std::vector<CheckResult> run_default_matrix() {
  std::vector<CheckResult> out;
  const std::complex<double> alpha{1.0, 0.5};
  const std::vector<FrameParams> frames = default_frames();
  const OscillatorParams matrix[] = {
      {1.0, 0.0, 0.0, {0.0}},  {1.0, 0.0, 1.0, {0.0}},  {1.0, 0.2, 1.0, {0.0}},
      {1.0, 0.5, 2.0, {0.0}},  {2.0, 1.0, -1.0, {0.0}}, {0.5, 2.0, 0.5, {0.0}},
      {0.5, 2.0, 2.0, {0.0}},  {1.0, 2.5, -0.5, {0.0}}, {0.0, 0.5, 1.0, {0.0}},
      {0.0, 0.2, 0.5, {0.0}},  {0.0, 1.0, 2.0, {0.0}},
  };
  for (const OscillatorParams& p : matrix)
    append_param_checks(p, alpha, 1.0, frames, out);
  append_global_checks(out);
  return out;
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

void print_check_table(std::ostream& out, std::span<const CheckResult> results) {
  std::size_t failures = 0;
  for (const CheckResult& r : results) {
    char numbers[96];
    std::snprintf(numbers, sizeof numbers, "defect %.3g tol %.3g", r.defect, r.tolerance);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " | " << r.subject << " | "
        << numbers;
    if (!r.note.empty()) out << " | " << r.note;
    out << '\n';
    if (!r.passed) ++failures;
  }
  out << results.size() << " checks, " << failures << " failed\n";
}

}  // namespace cktomo
