#pragma once

/*
 * Symplectic and optical tomograms of the Gaussian states.  A tomogram slice
 * along the rotated-scaled quadrature X = mu*q + nu*p is the normal density
 *
 *   w(X, mu, nu) = (2 pi sigma_X)^{-1/2} exp(-(X - X_bar)^2 / (2 sigma_X)),
 *   X_bar   = mu <q> + nu <p>,
 *   sigma_X = mu^2 sigma_qq + nu^2 sigma_pp + 2 mu nu sigma_qp,
 *
 * and the optical tomogram is the slice at (mu, nu) = (cos theta, sin theta).
 * Homogeneity w(lambda X, lambda mu, lambda nu) = |lambda|^{-1} w(X, mu, nu)
 * holds identically, and the two-angle tomographic entropies obey
 * S(theta) + S(theta + pi/2) >= ln(pi e) with equality for coherent states.
 */

#include <span>
#include <vector>

#include "cktomo/moments.hpp"

namespace cktomo {

struct FrameParams {
  double mu = 1.0;
  double nu = 0.0;
};

struct OpticalAngle {
  double theta = 0.0;
};

struct GaussianSlice {
  double mean = 0.0;
  double variance = 0.0;
};

// Throws std::invalid_argument for the degenerate frame mu = nu = 0.
GaussianSlice slice(const StateMoments& moments, FrameParams frame);

double tomogram_value(const GaussianSlice& s, double x);

// Same code path as slice((cos theta, sin theta)) by construction.
double optical_tomogram(const StateMoments& moments, OpticalAngle angle, double x);

// |w(lambda X, lambda mu, lambda nu) - |lambda|^{-1} w(X, mu, nu)|.
// Throws std::invalid_argument for lambda = 0.
double homogeneity_check(const StateMoments& moments, FrameParams frame, double lambda,
                         double x);

struct EntropicCheck {
  double sum = 0.0;                // S(theta) + S(theta + pi/2), analytic
  double bound = 0.0;              // ln(pi e)
  bool satisfied = false;          // sum >= bound - 1e-9
  double quadrature_defect = 0.0;  // |analytic - quadrature| for the sum
};

// Evaluates both entropies analytically (0.5 ln(2 pi e sigma_X)) and by
// adaptive quadrature of -w ln w; the two routes agree to ~1e-9.
EntropicCheck entropic_check(const StateMoments& moments, OpticalAngle angle);

// Row-per-frame matrix of tomogram values: values[r * x.size() + c] is the
// tomogram of frames[r] at x[c].
struct TomogramGrid {
  std::vector<FrameParams> frames;
  std::vector<double> x;
  std::vector<double> values;

  double at(std::size_t row, std::size_t col) const { return values[row * x.size() + col]; }
};

// Dispatches to the OpenMP kernel when built with OpenMP.
TomogramGrid tomogram_grid(const StateMoments& moments,
                           std::span<const FrameParams> frames,
                           std::span<const double> x_grid);

// |integral of row r over mean +- 10 sqrt(var) minus 1| per frame.
std::vector<double> row_normalization_defects(const StateMoments& moments,
                                              std::span<const FrameParams> frames);

}  // namespace cktomo
