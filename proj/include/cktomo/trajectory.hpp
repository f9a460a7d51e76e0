#pragma once

/*
 * Closed-form complex trajectories eps(t) of the damped oscillator
 *
 *     eps'' + 2*gamma*eps' + [omega0^2 - 2*kappa*sum_k delta(t - tau_k)] eps = 0,
 *     eps(0) = 1,   eps'(0) = i*Omega_eff,
 *
 * evaluated without any time stepping.  Between kicks the solution lives in a
 * two-dimensional mode basis exp(lambda_plus t), exp(lambda_minus t); a kick
 * leaves eps continuous and shifts eps' by 2*kappa*eps(tau), which in
 * coefficient space is a unimodular rank-one update.  Every branch conserves
 *
 *     exp(2*gamma*t) * (eps' conj(eps) - conj(eps') eps) = 2i*Omega_eff,
 *
 * the normalisation that makes the associated Gaussian states saturate the
 * uncertainty relation.
 */

#include <complex>
#include <span>
#include <vector>

#include "cktomo/params.hpp"

namespace cktomo {

struct TrajectoryPoint {
  double t = 0.0;
  std::complex<double> eps;
  std::complex<double> eps_dot;
};

// Exponents of the inter-kick mode basis: (-gamma +- i*Omega) for weak
// damping, (-gamma +- Omega) for strong damping, (0, -2*gamma) for the free
// particle.
struct ModeBasis {
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
};

struct ModeCoefficients {
  std::complex<double> a;  // multiplies exp(lambda_plus * t)
  std::complex<double> b;  // multiplies exp(lambda_minus * t)
};

// One inter-kick segment.  start_time is the kick instant that opened the
// segment (-inf for the pre-kick branch); the segment applies for
// t > start_time.
struct TrajectoryBranch {
  double start_time;
  ModeCoefficients coeffs;
};

// Single-kick coefficient map (A1, B1)^T = M (A0, B0)^T for the canonical
// kick at t = 0.  Unimodular for every kappa; the identity map at kappa = 0.
struct TransferMatrix {
  std::complex<double> m00, m01, m10, m11;

  std::complex<double> det() const { return m00 * m11 - m01 * m10; }
  ModeCoefficients apply(const ModeCoefficients& c) const {
    return {m00 * c.a + m01 * c.b, m10 * c.a + m11 * c.b};
  }
};

ModeBasis mode_basis(const OscillatorParams& params);

// Weak damping:   ((1 - i*kappa/Omega, -i*kappa/Omega), (i*kappa/Omega, 1 + i*kappa/Omega))
// Strong / free:  ((1 + kappa/Omega,    kappa/Omega),  (-kappa/Omega,   1 - kappa/Omega))
// with Omega = effective_frequency(params).
TransferMatrix transfer_matrix(const OscillatorParams& params);

TrajectoryPoint evaluate_mode(const ModeCoefficients& coeffs, const ModeBasis& basis,
                              double t);

// Pre-kick coefficients from the initial conditions, then one rank-one jump
// per kick: A += d*exp(-lambda_plus*tau), B -= d*exp(-lambda_minus*tau) with
// d = 2*kappa*eps(tau) / (lambda_plus - lambda_minus).
std::vector<TrajectoryBranch> trajectory_branches(const OscillatorParams& params);

// Prebuilt branch table for repeated evaluation (grid kernels, minimisers).
class TrajectoryEvaluator {
 public:
  explicit TrajectoryEvaluator(const OscillatorParams& params);

  TrajectoryPoint operator()(double t) const;

  const ModeBasis& basis() const { return basis_; }
  const std::vector<TrajectoryBranch>& branches() const { return branches_; }

 private:
  ModeBasis basis_;
  std::vector<TrajectoryBranch> branches_;
};

TrajectoryPoint epsilon_closed(const OscillatorParams& params, double t);

// exp(2*gamma*t) * (eps' conj(eps) - conj(eps') eps); equals 2i*Omega_eff on
// every branch of every regime.
std::complex<double> wronskian(const TrajectoryPoint& point, double gamma);

// Closed-form evaluation on a sorted grid.  Runs the OpenMP kernel when the
// library is built with OpenMP, the serial reference otherwise.
std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid);

}  // namespace cktomo
