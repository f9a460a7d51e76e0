#include "cktomo/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "cktomo/oracle.hpp"

// Serial and OpenMP kernels share the per-element helpers below, so the two
// variants differ only in loop scheduling and stay bitwise identical.

namespace cktomo {
namespace {

void require_time_grid(std::span<const double> t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i]))
      throw std::invalid_argument("time grid entries must be finite");
    if (i > 0 && t_grid[i] < t_grid[i - 1])
      throw std::invalid_argument("time grid must be sorted ascending");
  }
}

void require_x_grid(std::span<const double> x_grid) {
  for (double x : x_grid)
    if (!std::isfinite(x)) throw std::invalid_argument("x grid entries must be finite");
}

MomentSample moment_sample(const TrajectoryEvaluator& eval, std::complex<double> alpha,
                           double gamma, double omega_eff, double t) {
  MomentSample s;
  s.t = t;
  const TrajectoryPoint point = eval(t);
  s.second = second_moments(point, gamma, omega_eff);
  s.first = first_moments(point, alpha, gamma);
  s.uncertainty_defect = s.second.uncertainty_defect();
  return s;
}

// Slices are precomputed per frame before any value loop runs, so degenerate
// frames throw up front instead of inside a parallel region.
std::vector<GaussianSlice> frame_slices(const StateMoments& moments,
                                        std::span<const FrameParams> frames) {
  std::vector<GaussianSlice> slices;
  slices.reserve(frames.size());
  for (const FrameParams& frame : frames) slices.push_back(slice(moments, frame));
  return slices;
}

double row_defect(const GaussianSlice& s) {
  const double half_width = 10.0 * std::sqrt(s.variance);
  const double integral = quadrature(
      [&s](double x) { return tomogram_value(s, x); }, s.mean - half_width,
      s.mean + half_width, 1e-9);
  return std::abs(integral - 1.0);
}

}  // namespace

namespace serial {

std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid) {
  require_time_grid(t_grid);
  const TrajectoryEvaluator eval(params);
  std::vector<TrajectoryPoint> out(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) out[i] = eval(t_grid[i]);
  return out;
}

std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid) {
  require_time_grid(t_grid);
  const TrajectoryEvaluator eval(params);
  const double omega_eff = effective_frequency(params);
  std::vector<MomentSample> out(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    out[i] = moment_sample(eval, alpha, params.gamma, omega_eff, t_grid[i]);
  return out;
}

TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid) {
  require_x_grid(x_grid);
  const std::vector<GaussianSlice> slices = frame_slices(moments, frames);
  TomogramGrid grid;
  grid.frames.assign(frames.begin(), frames.end());
  grid.x.assign(x_grid.begin(), x_grid.end());
  grid.values.resize(frames.size() * x_grid.size());
  for (std::size_t r = 0; r < frames.size(); ++r)
    for (std::size_t c = 0; c < x_grid.size(); ++c)
      grid.values[r * x_grid.size() + c] = tomogram_value(slices[r], x_grid[c]);
  return grid;
}

std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames) {
  const std::vector<GaussianSlice> slices = frame_slices(moments, frames);
  std::vector<double> defects(frames.size());
  for (std::size_t r = 0; r < frames.size(); ++r) defects[r] = row_defect(slices[r]);
  return defects;
}

}  // namespace serial

namespace openmp {

#ifdef _OPENMP

std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid) {
  require_time_grid(t_grid);
  const TrajectoryEvaluator eval(params);
  std::vector<TrajectoryPoint> out(t_grid.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(t_grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = eval(t_grid[i]);
  return out;
}

std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid) {
  require_time_grid(t_grid);
  const TrajectoryEvaluator eval(params);
  const double omega_eff = effective_frequency(params);
  std::vector<MomentSample> out(t_grid.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(t_grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = moment_sample(eval, alpha, params.gamma, omega_eff, t_grid[i]);
  return out;
}

TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid) {
  require_x_grid(x_grid);
  const std::vector<GaussianSlice> slices = frame_slices(moments, frames);
  TomogramGrid grid;
  grid.frames.assign(frames.begin(), frames.end());
  grid.x.assign(x_grid.begin(), x_grid.end());
  grid.values.resize(frames.size() * x_grid.size());
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(frames.size());
  const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(x_grid.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r)
    for (std::ptrdiff_t c = 0; c < cols; ++c)
      grid.values[r * cols + c] = tomogram_value(slices[r], x_grid[c]);
  return grid;
}

std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames) {
  const std::vector<GaussianSlice> slices = frame_slices(moments, frames);
  std::vector<double> defects(frames.size());
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(frames.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < rows; ++r) defects[r] = row_defect(slices[r]);
  return defects;
}

#else  // built without OpenMP: keep the symbols, delegate to the reference

std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid) {
  return serial::trajectory_series(params, t_grid);
}

std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid) {
  return serial::moment_series(params, alpha, t_grid);
}

TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid) {
  return serial::tomogram_grid(moments, frames, x_grid);
}

std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames) {
  return serial::row_normalization_defects(moments, frames);
}

#endif

}  // namespace openmp

std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid) {
#ifdef _OPENMP
  return openmp::trajectory_series(params, t_grid);
#else
  return serial::trajectory_series(params, t_grid);
#endif
}

std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid) {
#ifdef _OPENMP
  return openmp::moment_series(params, alpha, t_grid);
#else
  return serial::moment_series(params, alpha, t_grid);
#endif
}

TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid) {
#ifdef _OPENMP
  return openmp::tomogram_grid(moments, frames, x_grid);
#else
  return serial::tomogram_grid(moments, frames, x_grid);
#endif
}

std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames) {
#ifdef _OPENMP
  return openmp::row_normalization_defects(moments, frames);
#else
  return serial::row_normalization_defects(moments, frames);
#endif
}

}  // namespace cktomo
