#pragma once

/*
 * Quadrature moments of the Gaussian states built on the mode function:
 *
 *   sigma_qq = |eps|^2 / 2
 *   sigma_pp = exp(4*gamma*t) |eps'|^2 / (2 Omega_eff^2)
 *   sigma_qp = exp(2*gamma*t) Re(eps' conj(eps)) / (2 Omega_eff)   (signed)
 *
 * The Wronskian normalisation makes sigma_qq*sigma_pp - sigma_qp^2 = 1/4
 * exactly, for every regime and every time.  Coherent-state centroids follow
 * the classical flow: mean_q = (alpha conj(eps) + conj(alpha) eps)/sqrt(2)
 * and mean_p = exp(2*gamma*t) d(mean_q)/dt, i.e.
 * mean_p = sqrt(2) exp(2*gamma*t) Re(conj(alpha) eps').
 */

#include <complex>

#include "cktomo/params.hpp"
#include "cktomo/trajectory.hpp"

namespace cktomo {

struct SecondMoments {
  double sigma_qq = 0.0;
  double sigma_pp = 0.0;
  double sigma_qp = 0.0;

  // sigma_qq*sigma_pp - sigma_qp^2 - 1/4, zero up to roundoff.
  double uncertainty_defect() const {
    return sigma_qq * sigma_pp - sigma_qp * sigma_qp - 0.25;
  }
};

struct FirstMoments {
  double mean_q = 0.0;
  double mean_p = 0.0;
};

struct StateMoments {
  FirstMoments first;
  SecondMoments second;
};

SecondMoments second_moments(const TrajectoryPoint& point, double gamma,
                             double omega_eff);

FirstMoments first_moments(const TrajectoryPoint& point, std::complex<double> alpha,
                           double gamma);

// Squeezing coefficient k^2(t) = |eps(t)|^2 = 2*sigma_qq(t).
double squeezing_coefficient(const TrajectoryPoint& point);

// Both moments of the state at time t, evaluated from the closed form.
StateMoments state_moments(const OscillatorParams& params, std::complex<double> alpha,
                           double t);

// Closed-form post-kick position dispersions for the canonical single kick
// at t = 0 (throws std::invalid_argument for any other kick list).
//
// weak:   (e^{-2 gamma t}/2) [1 + s^2 sin^2(Omega t) + s sin(2 Omega t)]
// strong: (e^{-2 gamma t}/2) [cosh 2Omega t + s^2 (cosh 2Omega t - 1)/2
//                                           + s sinh 2Omega t]
// with s = (2*kappa + gamma)/Omega.
double dispersion_weak_closed(const OscillatorParams& params, double t);
double dispersion_strong_closed(const OscillatorParams& params, double t);

// Free particle: k^2(t) = [1 + (kappa/gamma) u]^2 + u^2/4, u = 1 - e^{-2 gamma t}.
double k2_free_closed(const OscillatorParams& params, double t);

struct MinSqueezing {
  double bound = 0.0;       // closed-form estimate for the n-th pseudo-period
  double k2_min = 0.0;      // numerically minimised k^2 over that period
  double t_min = 0.0;       // minimiser location
  double deviation = 0.0;   // (k2_min - bound) / bound
};

// Weak-damping squeezing minimum over the n-th pseudo-period
// [(n-1) pi/Omega, n pi/Omega], n >= 1.  The closed form
//   [1 + 2 a^2/Omega^2 - (2a/Omega^2) sqrt(a^2 + Omega^2)]
//     * exp[(gamma/Omega) acos(Omega/sqrt(a^2+Omega^2)) - (pi gamma/Omega)(2n-1)]
// with a = kappa + gamma/2 locates the undamped minimum only, so for
// gamma > 0 it deviates from the true minimum; both values are returned.
MinSqueezing min_squeezing_weak(const OscillatorParams& params, int n = 1);

}  // namespace cktomo
