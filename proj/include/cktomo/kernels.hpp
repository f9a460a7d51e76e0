#pragma once

// Grid evaluation kernels.  Every element is independent, so the OpenMP
// variants parallelise the loops without changing per-element arithmetic;
// cktomo::serial is the reference the tests compare against bit for bit.

#include <complex>
#include <span>
#include <vector>

#include "cktomo/moments.hpp"
#include "cktomo/tomography.hpp"
#include "cktomo/trajectory.hpp"

namespace cktomo {

struct MomentSample {
  double t = 0.0;
  SecondMoments second;
  FirstMoments first;
  double uncertainty_defect = 0.0;
};

namespace serial {

std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid);

std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid);

TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid);

std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames);

}  // namespace serial

namespace openmp {

std::vector<TrajectoryPoint> trajectory_series(const OscillatorParams& params,
                                               std::span<const double> t_grid);

std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid);

TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid);

std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames);

}  // namespace openmp

// Dispatcher (OpenMP build -> openmp kernel, otherwise serial); trajectory_series
// and tomogram_grid dispatchers are declared next to their result types.
std::vector<MomentSample> moment_series(const OscillatorParams& params,
                                        std::complex<double> alpha,
                                        std::span<const double> t_grid);

}  // namespace cktomo
