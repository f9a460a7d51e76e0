#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cktomo/kernels.hpp"

using namespace cktomo;
using cplx = std::complex<double>;

namespace {

const OscillatorParams kMulti{1.0, 0.2, 0.7, {0.0, 1.3, 2.9}};
const OscillatorParams kStrong{0.5, 2.0, 0.5, {0.0}};
const cplx kAlpha{1.0, 0.5};

std::vector<double> grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

}  // namespace

TEST_CASE("parallel trajectory kernel is bit-identical to serial") {
  for (const OscillatorParams& p : {kMulti, kStrong}) {
    const std::vector<double> t = grid(-1.5, 4.0, 257);
    const auto a = serial::trajectory_series(p, t);
    const auto b = openmp::trajectory_series(p, t);
    const auto c = trajectory_series(p, t);
    REQUIRE(a.size() == t.size());
    REQUIRE(b.size() == t.size());
    REQUIRE(c.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(a[i].t == b[i].t);
      CHECK(a[i].eps == b[i].eps);
      CHECK(a[i].eps_dot == b[i].eps_dot);
      CHECK(a[i].eps == c[i].eps);
      CHECK(a[i].eps_dot == c[i].eps_dot);
    }
  }
}

TEST_CASE("parallel moment kernel is bit-identical to serial") {
  const std::vector<double> t = grid(0.0, 5.0, 257);
  const auto a = serial::moment_series(kMulti, kAlpha, t);
  const auto b = openmp::moment_series(kMulti, kAlpha, t);
  const auto c = moment_series(kMulti, kAlpha, t);
  REQUIRE(a.size() == t.size());
  REQUIRE(b.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].second.sigma_qq == b[i].second.sigma_qq);
    CHECK(a[i].second.sigma_pp == b[i].second.sigma_pp);
    CHECK(a[i].second.sigma_qp == b[i].second.sigma_qp);
    CHECK(a[i].first.mean_q == b[i].first.mean_q);
    CHECK(a[i].first.mean_p == b[i].first.mean_p);
    CHECK(a[i].uncertainty_defect == b[i].uncertainty_defect);
    CHECK(a[i].second.sigma_qq == c[i].second.sigma_qq);
    CHECK(a[i].first.mean_p == c[i].first.mean_p);
  }
}

TEST_CASE("parallel tomogram kernel is bit-identical to serial") {
  const StateMoments sm = state_moments(kMulti, kAlpha, 3.2);
  std::vector<FrameParams> frames;
  for (int k = 0; k < 12; ++k)
    frames.push_back({std::cos(0.3 * k), std::sin(0.3 * k)});
  const std::vector<double> x = grid(-6.0, 6.0, 161);
  const TomogramGrid a = serial::tomogram_grid(sm, frames, x);
  const TomogramGrid b = openmp::tomogram_grid(sm, frames, x);
  const TomogramGrid c = tomogram_grid(sm, frames, x);
  REQUIRE(a.values.size() == frames.size() * x.size());
  REQUIRE(a.values.size() == b.values.size());
  REQUIRE(a.values.size() == c.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    CHECK(a.values[i] == b.values[i]);
    CHECK(a.values[i] == c.values[i]);
  }
}

TEST_CASE("parallel row normalization is bit-identical to serial") {
  const StateMoments sm = state_moments(kStrong, kAlpha, 1.0);
  std::vector<FrameParams> frames;
  for (int k = 0; k < 7; ++k)
    frames.push_back({std::cos(0.45 * k + 0.1), std::sin(0.45 * k + 0.1)});
  const auto a = serial::row_normalization_defects(sm, frames);
  const auto b = openmp::row_normalization_defects(sm, frames);
  const auto c = row_normalization_defects(sm, frames);
  REQUIRE(a.size() == frames.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] == c[i]);
    CHECK(a[i] < 1e-8);
  }
}

TEST_CASE("kernel input validation") {
  const std::vector<double> bad{0.0, 2.0, 1.0};
  CHECK_THROWS_AS(serial::trajectory_series(kMulti, bad), std::invalid_argument);
  CHECK_THROWS_AS(openmp::moment_series(kMulti, kAlpha, bad), std::invalid_argument);
  const StateMoments sm = state_moments(kStrong, kAlpha, 1.0);
  const std::vector<FrameParams> degenerate{{1.0, 0.0}, {0.0, 0.0}};
  const std::vector<double> x{0.0, 1.0};
  CHECK_THROWS_AS(serial::tomogram_grid(sm, degenerate, x), std::invalid_argument);
  CHECK_THROWS_AS(openmp::tomogram_grid(sm, degenerate, x), std::invalid_argument);
}
