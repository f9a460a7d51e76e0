#include "cktomo/moments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cktomo/oracle.hpp"

namespace cktomo {

namespace {

void require_single_kick_at_zero(const OscillatorParams& params) {
  if (params.kick_times.size() != 1 || params.kick_times[0] != 0.0)
    throw std::invalid_argument(
        "closed-form dispersion requires the single canonical kick at t = 0");
}

double require_regime(const OscillatorParams& params, Regime want, const char* what) {
  if (classify_regime(params) != want)
    throw RegimeError(std::string(what) + " requires the " +
                      regime_name(want) + " regime");
  return effective_frequency(params);
}

}  // namespace

SecondMoments second_moments(const TrajectoryPoint& point, double gamma,
                             double omega_eff) {
  const double e2 = std::exp(2.0 * gamma * point.t);
  SecondMoments m;
  m.sigma_qq = 0.5 * std::norm(point.eps);
  m.sigma_pp = e2 * e2 * std::norm(point.eps_dot) / (2.0 * omega_eff * omega_eff);
  m.sigma_qp = e2 * (point.eps_dot * std::conj(point.eps)).real() / (2.0 * omega_eff);
  return m;
}

FirstMoments first_moments(const TrajectoryPoint& point, std::complex<double> alpha,
                           double gamma) {
  const double sqrt2 = std::numbers::sqrt2;
  FirstMoments m;
  m.mean_q = sqrt2 * (std::conj(alpha) * point.eps).real();
  m.mean_p =
      sqrt2 * std::exp(2.0 * gamma * point.t) * (std::conj(alpha) * point.eps_dot).real();
  return m;
}

double squeezing_coefficient(const TrajectoryPoint& point) {
  return std::norm(point.eps);
}

StateMoments state_moments(const OscillatorParams& params, std::complex<double> alpha,
                           double t) {
  const double omega = effective_frequency(params);
  const TrajectoryPoint point = epsilon_closed(params, t);
  return {first_moments(point, alpha, params.gamma),
          second_moments(point, params.gamma, omega)};
}

double dispersion_weak_closed(const OscillatorParams& params, double t) {
  const double omega = require_regime(params, Regime::WeakDamping, "dispersion_weak_closed");
  require_single_kick_at_zero(params);
  const double s = (2.0 * params.kappa + params.gamma) / omega;
  const double sn = std::sin(omega * t);
  return 0.5 * std::exp(-2.0 * params.gamma * t) *
         (1.0 + s * s * sn * sn + s * std::sin(2.0 * omega * t));
}

double dispersion_strong_closed(const OscillatorParams& params, double t) {
  const double omega =
      require_regime(params, Regime::StrongDamping, "dispersion_strong_closed");
  require_single_kick_at_zero(params);
  const double s = (2.0 * params.kappa + params.gamma) / omega;
  const double ch = std::cosh(2.0 * omega * t);
  const double sh = std::sinh(2.0 * omega * t);  // = sqrt(ch^2 - 1) for t >= 0
  return 0.5 * std::exp(-2.0 * params.gamma * t) *
         (ch + 0.5 * s * s * (ch - 1.0) + s * sh);
}

double k2_free_closed(const OscillatorParams& params, double t) {
  require_regime(params, Regime::FreeParticle, "k2_free_closed");
  require_single_kick_at_zero(params);
  const double u = -std::expm1(-2.0 * params.gamma * t);
  const double re = 1.0 + params.kappa / params.gamma * u;
  return re * re + 0.25 * u * u;
}

MinSqueezing min_squeezing_weak(const OscillatorParams& params, int n) {
  const double omega = require_regime(params, Regime::WeakDamping, "min_squeezing_weak");
  require_single_kick_at_zero(params);
  if (n < 1) throw std::invalid_argument("period index n must be >= 1");

  const double a = params.kappa + 0.5 * params.gamma;
  const double root = std::sqrt(a * a + omega * omega);
  const double osc = 1.0 + 2.0 * a * a / (omega * omega) -
                     2.0 * a / (omega * omega) * root;
  const double expo = params.gamma / omega *
                          (std::acos(omega / root) - std::numbers::pi * (2.0 * n - 1.0));

  MinSqueezing result;
  result.bound = osc * std::exp(expo);

  const double period = std::numbers::pi / omega;
  const Minimum numeric = minimize_k2_numeric(params, (n - 1) * period, n * period);
  result.k2_min = numeric.value;
  result.t_min = numeric.t;
  result.deviation = (result.k2_min - result.bound) / result.bound;
  return result;
}

}  // namespace cktomo
