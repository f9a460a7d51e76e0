// Serial reference vs OpenMP kernels on the three grid workloads.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "cktomo/kernels.hpp"
#include "cktomo/moments.hpp"

namespace {

using namespace cktomo;

OscillatorParams bench_params() { return {1.0, 0.2, 0.7, {0.0, 1.3, 2.9}}; }

std::vector<double> time_grid(std::int64_t n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = 10.0 * i / (n - 1);
  return grid;
}

void BM_trajectory_serial(benchmark::State& state) {
  const OscillatorParams p = bench_params();
  const std::vector<double> grid = time_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::trajectory_series(p, grid));
}
BENCHMARK(BM_trajectory_serial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_trajectory_openmp(benchmark::State& state) {
  const OscillatorParams p = bench_params();
  const std::vector<double> grid = time_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(openmp::trajectory_series(p, grid));
}
BENCHMARK(BM_trajectory_openmp)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_moments_serial(benchmark::State& state) {
  const OscillatorParams p = bench_params();
  const std::vector<double> grid = time_grid(state.range(0));
  const std::complex<double> alpha{1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(serial::moment_series(p, alpha, grid));
}
BENCHMARK(BM_moments_serial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_moments_openmp(benchmark::State& state) {
  const OscillatorParams p = bench_params();
  const std::vector<double> grid = time_grid(state.range(0));
  const std::complex<double> alpha{1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(openmp::moment_series(p, alpha, grid));
}
BENCHMARK(BM_moments_openmp)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

std::vector<FrameParams> bench_frames(int rows) {
  std::vector<FrameParams> frames;
  for (int k = 0; k < rows; ++k) {
    const double theta = 3.14159265358979324 * k / rows;
    frames.push_back({std::cos(theta), std::sin(theta)});
  }
  return frames;
}

void BM_tomogram_serial(benchmark::State& state) {
  const StateMoments sm = state_moments(bench_params(), {1.0, 0.5}, 1.0);
  const std::vector<FrameParams> frames = bench_frames(64);
  const std::vector<double> xs = time_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::tomogram_grid(sm, frames, xs));
}
BENCHMARK(BM_tomogram_serial)->Arg(1 << 10)->Arg(1 << 13);

void BM_tomogram_openmp(benchmark::State& state) {
  const StateMoments sm = state_moments(bench_params(), {1.0, 0.5}, 1.0);
  const std::vector<FrameParams> frames = bench_frames(64);
  const std::vector<double> xs = time_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(openmp::tomogram_grid(sm, frames, xs));
}
BENCHMARK(BM_tomogram_openmp)->Arg(1 << 10)->Arg(1 << 13);

}  // namespace

BENCHMARK_MAIN();
