#include "cktomo/params.hpp"

#include <cmath>
#include <limits>

namespace cktomo {

void OscillatorParams::validate() const {
  if (!std::isfinite(omega0) || omega0 < 0.0)
    throw std::invalid_argument("omega0 must be finite and >= 0");
  if (!std::isfinite(gamma) || gamma < 0.0)
    throw std::invalid_argument("gamma must be finite and >= 0");
  if (!std::isfinite(kappa))
    throw std::invalid_argument("kappa must be finite");
  double prev = -std::numeric_limits<double>::infinity();
  for (double tau : kick_times) {
    if (!std::isfinite(tau) || tau < 0.0)
      throw std::invalid_argument("kick times must be finite and >= 0");
    if (tau <= prev)
      throw std::invalid_argument("kick times must be strictly increasing");
    prev = tau;
  }
}

Regime classify_regime(const OscillatorParams& params) {
  params.validate();
  if (params.omega0 == params.gamma) {
    throw RegimeError(params.omega0 == 0.0
                          ? "omega0 = gamma = 0: mode function undefined"
                          : "critical damping (omega0 == gamma) is not supported");
  }
  if (params.omega0 == 0.0) return Regime::FreeParticle;
  return params.omega0 > params.gamma ? Regime::WeakDamping : Regime::StrongDamping;
}

double effective_frequency(const OscillatorParams& params) {
  switch (classify_regime(params)) {
    case Regime::WeakDamping:
      return std::sqrt(params.omega0 * params.omega0 - params.gamma * params.gamma);
    case Regime::StrongDamping:
      return std::sqrt(params.gamma * params.gamma - params.omega0 * params.omega0);
    case Regime::FreeParticle:
      return params.gamma;
  }
  return 0.0;  // unreachable
}

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::WeakDamping: return "weak-damping";
    case Regime::StrongDamping: return "strong-damping";
    case Regime::FreeParticle: return "free-particle";
  }
  return "?";
}

}  // namespace cktomo
