#pragma once

// Invariant suite: replays every closed form against the ODE integrator, the
// quadrature oracle, and the exact algebraic identities, and reports one
// pass/fail row per check.  Checks whose defect is dominated by IEEE-754
// roundoff (the Wronskian and uncertainty products span ~30 decades for
// strongly damped runs) are evaluated only where the noise floor sits safely
// below the tolerance; the row notes how many points were checked.

#include <complex>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cktomo/params.hpp"
#include "cktomo/scenario.hpp"
#include "cktomo/trajectory.hpp"

namespace cktomo {

struct CheckResult {
  std::string name;
  std::string subject;
  double defect = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

// Random draw from the per-regime sampling boxes of the verification suite:
// weak omega0 in [0.5, 2], gamma in [0, 0.9 omega0]; strong gamma in
// [1.1 omega0, 5]; free gamma in [0.1, 3]; kappa in [-2, 2] throughout.
OscillatorParams sample_params(Regime regime, std::mt19937_64& rng);

// Roundoff floor of the Wronskian defect at a point, given the relative
// accuracy `rel` of eps and eps_dot plus an absolute error `abs_err` on
// each component (zero for closed-form values; ODE solutions carry one from
// their absolute tolerance, which dominates on strongly decayed modes).
double wronskian_noise_floor(const TrajectoryPoint& point, double gamma, double rel,
                             double abs_err = 0.0);

// Relative accuracy models feeding the noise floor: closed-form evaluation
// is good to a few tens of ulps; an ODE solution at relative tolerance
// rel_tol accumulates roughly two orders beyond it over a ten-unit run.
inline constexpr double kClosedFormRel = 64.0 * 2.220446049250313e-16;
constexpr double oracle_rel(double rel_tol) { return 256.0 * rel_tol + kClosedFormRel; }

// Invariant checks for one parameter set / state (the per-set block of the
// default matrix, reused verbatim for user scenarios).
std::vector<CheckResult> run_scenario_checks(const Scenario& scenario);

// Fixed parameter matrix covering all three regimes plus the cross-set
// checks (integrator order, quadrature sanity, squeezing fixed points,
// multi-kick propagation, coherent entropy equality).
std::vector<CheckResult> run_default_matrix();

bool all_passed(std::span<const CheckResult> results);
void print_check_table(std::ostream& out, std::span<const CheckResult> results);

}  // namespace cktomo
