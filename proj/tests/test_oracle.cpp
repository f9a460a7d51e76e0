#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cktomo/oracle.hpp"
#include "cktomo/trajectory.hpp"

using namespace cktomo;

namespace {

const OscillatorParams kWeak{1.0, 0.2, 1.0, {0.0}};
const OscillatorParams kStrong{0.5, 2.0, 0.5, {0.0}};
const OscillatorParams kFree{0.0, 0.5, 1.0, {0.0}};

}  // namespace

TEST_CASE("integration reproduces the frozen trajectory values") {
  {
    const TrajectoryPoint p = integrate_ode(kWeak, 1.0);
    CHECK(std::abs(p.eps - std::complex<double>{1.9827259568573294,
                                                0.67986064198462684}) < 1e-8);
    CHECK(std::abs(p.eps_dot - std::complex<double>{-0.059051286521721902,
                                                    0.31100121686569175}) < 1e-8);
  }
  {
    const TrajectoryPoint p = integrate_ode(kStrong, 1.0);
    CHECK(std::abs(p.eps - std::complex<double>{1.1908068424203772,
                                                0.45947486974419624}) < 1e-8);
  }
  {
    const TrajectoryPoint p = integrate_ode(kFree, 2.0);
    CHECK(std::abs(p.eps - std::complex<double>{2.7293294335267746,
                                                0.43233235838169365}) < 1e-8);
  }
}

TEST_CASE("integration handles several kicks") {
  const OscillatorParams p{1.0, 0.2, 0.7, {0.0, 1.3, 2.9}};
  const TrajectoryPoint ode = integrate_ode(p, 4.0);
  CHECK(std::abs(ode.eps - std::complex<double>{0.96295150726894242,
                                                0.91697653301811782}) < 1e-8);
  CHECK(std::abs(ode.eps_dot - std::complex<double>{-0.77365107224293996,
                                                    -0.53128583750747075}) < 1e-8);
}

TEST_CASE("backward integration agrees with the closed form") {
  for (const OscillatorParams& p : {kWeak, kStrong, kFree}) {
    const TrajectoryPoint ode = integrate_ode(p, -1.0);
    const TrajectoryPoint closed = epsilon_closed(p, -1.0);
    CHECK(std::abs(ode.eps - closed.eps) / std::max(1.0, std::abs(closed.eps)) < 1e-8);
  }
}

TEST_CASE("one series pass equals repeated single-point runs") {
  const OscillatorParams p{1.0, 0.2, 0.7, {0.0, 1.3, 2.9}};
  const std::vector<double> grid = {-0.5, 0.0, 0.4, 1.3, 2.0, 3.5};
  const std::vector<TrajectoryPoint> series = integrate_ode_series(p, grid);
  REQUIRE(series.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const TrajectoryPoint single = integrate_ode(p, grid[i]);
    CHECK(std::abs(series[i].eps - single.eps) < 1e-9);
  }
}

TEST_CASE("grid evaluation exactly at a kick stays pre-kick") {
  // the kick applies only to targets strictly beyond it
  const std::vector<double> grid = {0.0};
  const std::vector<TrajectoryPoint> at0 = integrate_ode_series(kWeak, grid);
  const double omega = effective_frequency(kWeak);
  CHECK(at0[0].eps == std::complex<double>{1.0, 0.0});
  CHECK(at0[0].eps_dot == std::complex<double>{0.0, omega});
}

TEST_CASE("tightening tolerances improves the defect") {
  const TrajectoryPoint closed = epsilon_closed(kWeak, 5.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    const TrajectoryPoint ode = integrate_ode(kWeak, 5.0, {tol, 1e-2 * tol, 0.0});
    const double defect = std::abs(ode.eps - closed.eps);
    CHECK(defect < prev);
    prev = defect;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("integrator input validation") {
  CHECK_THROWS_AS(integrate_ode(kWeak, 1.0, {0.0, 1e-12, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_ode(kWeak, 1.0, {1e-10, -1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_ode(kWeak, std::nan("")), std::invalid_argument);
  const std::vector<double> unsorted = {1.0, 0.5};
  CHECK_THROWS_AS(integrate_ode_series(kWeak, unsorted), std::invalid_argument);
  CHECK_THROWS_AS(integrate_ode({1.0, 1.0, 0.0, {0.0}}, 1.0), RegimeError);
}

TEST_CASE("quadrature fixed points") {
  CHECK(std::abs(quadrature([](double t) { return std::sin(t); }, 0.0, std::numbers::pi,
                            1e-12) - 2.0) < 1e-12);
  CHECK(std::abs(quadrature([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-12) -
                 (std::numbers::e - 1.0)) < 1e-12);
  CHECK(quadrature([](double t) { return t; }, 2.0, 2.0, 1e-10) == 0.0);
  // antisymmetric integrand: the panel pre-split must not be fooled by the
  // cancellation of the top-level estimate
  CHECK(std::abs(quadrature([](double t) { return t * t * t; }, -1.0, 1.0, 1e-10)) < 1e-12);
}

TEST_CASE("quadrature input validation") {
  const auto f = [](double t) { return t; };
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(quadrature(f, 0.0, inf, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(quadrature(f, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(quadrature(f, 0.0, 1.0, -1e-10), std::invalid_argument);
}

TEST_CASE("squeezing minimum of the undamped kicked oscillator") {
  const OscillatorParams p{1.0, 0.0, 1.0, {0.0}};
  const Minimum m = minimize_k2_numeric(p, 0.0, std::numbers::pi);
  CHECK(std::abs(m.value - (3.0 - 2.0 * std::numbers::sqrt2)) < 1e-9);
  CHECK(std::abs(m.t - 2.7488935718910691) < 1e-6);
}

TEST_CASE("squeezing minimum under weak damping against frozen values") {
  const OscillatorParams p{1.0, 0.1, 2.0, {0.0}};
  const double omega = effective_frequency(p);
  const Minimum m = minimize_k2_numeric(p, 0.0, std::numbers::pi / omega);
  CHECK(std::abs(m.value - 0.029402212321408805) < 1e-9);
  CHECK(std::abs(m.t - 2.9306305021149983) < 1e-6);
}

TEST_CASE("minimum of a flat trajectory is one") {
  const OscillatorParams p{1.0, 0.0, 0.0, {0.0}};
  const Minimum m = minimize_k2_numeric(p, 0.0, 3.0);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("minimizer input validation") {
  CHECK_THROWS_AS(minimize_k2_numeric(kWeak, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(minimize_k2_numeric(kWeak, 2.0, 1.0), std::invalid_argument);
}
