#pragma once

#include <stdexcept>
#include <vector>

namespace cktomo {

// Damping regime of the constant part of the frequency.
enum class Regime { WeakDamping, StrongDamping, FreeParticle };

// Thrown for parameter sets whose mode function is degenerate.  Critical
// damping (omega0 == gamma, including omega0 == gamma == 0) has a vanishing
// effective frequency, so the kick transfer matrices and the Wronskian
// normalisation blow up; it is rejected rather than special-cased.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Oscillator configuration in dimensionless units (hbar = m = 1).  The
// time-dependent frequency is omega0^2 - 2*kappa * sum_k delta(t - tau_k);
// every kick shares the strength kappa.  kick_times must be non-negative
// and strictly increasing; the default is the single canonical kick at 0.
struct OscillatorParams {
  double omega0 = 1.0;
  double gamma = 0.0;
  double kappa = 0.0;
  std::vector<double> kick_times = {0.0};

  void validate() const;  // throws std::invalid_argument
};

// WeakDamping for omega0 > gamma >= 0, StrongDamping for gamma > omega0 > 0,
// FreeParticle for omega0 == 0, gamma > 0.  Throws RegimeError on
// omega0 == gamma.
Regime classify_regime(const OscillatorParams& params);

// sqrt(omega0^2 - gamma^2), sqrt(gamma^2 - omega0^2) or gamma depending on
// the regime.  This is the constant the trajectory Wronskian
// exp(2*gamma*t) * (eps' conj(eps) - conj(eps') eps) pins to 2i*Omega_eff.
double effective_frequency(const OscillatorParams& params);

const char* regime_name(Regime regime);

}  // namespace cktomo
