#include "cktomo/trajectory.hpp"

#include <cmath>
#include <limits>

namespace cktomo {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

ModeBasis mode_basis(const OscillatorParams& params) {
  const Regime regime = classify_regime(params);
  const double omega = effective_frequency(params);
  switch (regime) {
    case Regime::WeakDamping:
      return {{-params.gamma, omega}, {-params.gamma, -omega}};
    case Regime::StrongDamping:
      return {{-params.gamma + omega, 0.0}, {-params.gamma - omega, 0.0}};
    case Regime::FreeParticle:
      return {{0.0, 0.0}, {-2.0 * params.gamma, 0.0}};
  }
  return {};
}

TransferMatrix transfer_matrix(const OscillatorParams& params) {
  const Regime regime = classify_regime(params);
  const double r = params.kappa / effective_frequency(params);
  if (regime == Regime::WeakDamping) {
    return {{1.0, -r}, {0.0, -r}, {0.0, r}, {1.0, r}};
  }
  return {{1.0 + r, 0.0}, {r, 0.0}, {-r, 0.0}, {1.0 - r, 0.0}};
}

TrajectoryPoint evaluate_mode(const ModeCoefficients& coeffs, const ModeBasis& basis,
                              double t) {
  const std::complex<double> ep = std::exp(basis.lambda_plus * t);
  const std::complex<double> em = std::exp(basis.lambda_minus * t);
  TrajectoryPoint point;
  point.t = t;
  point.eps = coeffs.a * ep + coeffs.b * em;
  point.eps_dot = coeffs.a * basis.lambda_plus * ep + coeffs.b * basis.lambda_minus * em;
  return point;
}

std::vector<TrajectoryBranch> trajectory_branches(const OscillatorParams& params) {
  const ModeBasis basis = mode_basis(params);
  const double omega = effective_frequency(params);
  const std::complex<double> dl = basis.lambda_plus - basis.lambda_minus;

  // eps(0) = 1, eps'(0) = i*Omega_eff.  Reproduces the per-regime pairs
  // (1 - i*gamma/2Omega, i*gamma/2Omega), ((1 + i + gamma/Omega)/2, ...),
  // (1 + i/2, -i/2).
  ModeCoefficients c;
  c.a = (kI * omega - basis.lambda_minus) / dl;
  c.b = (basis.lambda_plus - kI * omega) / dl;

  std::vector<TrajectoryBranch> branches;
  branches.reserve(params.kick_times.size() + 1);
  branches.push_back({-std::numeric_limits<double>::infinity(), c});
  for (double tau : params.kick_times) {
    const TrajectoryPoint at_kick = evaluate_mode(c, basis, tau);
    const std::complex<double> d = 2.0 * params.kappa * at_kick.eps / dl;
    c.a += d * std::exp(-basis.lambda_plus * tau);
    c.b -= d * std::exp(-basis.lambda_minus * tau);
    branches.push_back({tau, c});
  }
  return branches;
}

TrajectoryEvaluator::TrajectoryEvaluator(const OscillatorParams& params)
    : basis_(mode_basis(params)), branches_(trajectory_branches(params)) {}

TrajectoryPoint TrajectoryEvaluator::operator()(double t) const {
  // The branch opened by kick tau applies for t > tau, so evaluation exactly
  // at a kick instant reports the pre-kick point.
  std::size_t idx = 0;
  for (std::size_t k = branches_.size(); k-- > 1;) {
    if (branches_[k].start_time < t) {
      idx = k;
      break;
    }
  }
  return evaluate_mode(branches_[idx].coeffs, basis_, t);
}

TrajectoryPoint epsilon_closed(const OscillatorParams& params, double t) {
  return TrajectoryEvaluator(params)(t);
}

std::complex<double> wronskian(const TrajectoryPoint& point, double gamma) {
  const std::complex<double> cross =
      point.eps_dot * std::conj(point.eps) - std::conj(point.eps_dot) * point.eps;
  return std::exp(2.0 * gamma * point.t) * cross;
}

}  // namespace cktomo
