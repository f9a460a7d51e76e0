#include "cktomo/tomography.hpp"

#include <cmath>
#include <numbers>

#include "cktomo/oracle.hpp"

namespace cktomo {

GaussianSlice slice(const StateMoments& moments, FrameParams frame) {
  if (frame.mu == 0.0 && frame.nu == 0.0)
    throw std::invalid_argument("tomogram frame (mu, nu) must not be (0, 0)");
  const SecondMoments& s = moments.second;
  GaussianSlice out;
  out.mean = frame.mu * moments.first.mean_q + frame.nu * moments.first.mean_p;
  out.variance = frame.mu * frame.mu * s.sigma_qq + frame.nu * frame.nu * s.sigma_pp +
                 2.0 * frame.mu * frame.nu * s.sigma_qp;
  if (!(out.variance > 0.0))
    throw std::invalid_argument("tomogram slice variance must be positive");
  return out;
}

double tomogram_value(const GaussianSlice& s, double x) {
  const double d = x - s.mean;
  return std::exp(-d * d / (2.0 * s.variance)) /
         std::sqrt(2.0 * std::numbers::pi * s.variance);
}

double optical_tomogram(const StateMoments& moments, OpticalAngle angle, double x) {
  return tomogram_value(
      slice(moments, {std::cos(angle.theta), std::sin(angle.theta)}), x);
}

double homogeneity_check(const StateMoments& moments, FrameParams frame, double lambda,
                         double x) {
  if (lambda == 0.0) throw std::invalid_argument("homogeneity scale must be nonzero");
  const double scaled = tomogram_value(
      slice(moments, {lambda * frame.mu, lambda * frame.nu}), lambda * x);
  const double base = tomogram_value(slice(moments, frame), x);
  return std::abs(scaled - base / std::abs(lambda));
}

namespace {

double slice_entropy_quadrature(const GaussianSlice& s) {
  const double half_window = 12.0 * std::sqrt(s.variance);
  const auto integrand = [&s](double x) {
    const double w = tomogram_value(s, x);
    return w > 0.0 ? -w * std::log(w) : 0.0;
  };
  return quadrature(integrand, s.mean - half_window, s.mean + half_window, 1e-9);
}

}  // namespace

EntropicCheck entropic_check(const StateMoments& moments, OpticalAngle angle) {
  const GaussianSlice s1 =
      slice(moments, {std::cos(angle.theta), std::sin(angle.theta)});
  const double theta2 = angle.theta + 0.5 * std::numbers::pi;
  const GaussianSlice s2 = slice(moments, {std::cos(theta2), std::sin(theta2)});

  const auto analytic = [](const GaussianSlice& s) {
    return 0.5 * (std::log(2.0 * std::numbers::pi * s.variance) + 1.0);
  };

  EntropicCheck out;
  out.sum = analytic(s1) + analytic(s2);
  out.bound = std::log(std::numbers::pi) + 1.0;
  out.satisfied = out.sum >= out.bound - 1e-9;
  const double quad = slice_entropy_quadrature(s1) + slice_entropy_quadrature(s2);
  out.quadrature_defect = std::abs(out.sum - quad);
  return out;
}

}  // namespace cktomo
