#pragma once

// Scenario files: flat key-value text with dotted sections,
//
//   params.omega0 = 1.0
//   frames.theta  = 0, 0.7853981633974483
//
// full-line # comments, comma-separated lists.  Unknown keys are errors so a
// typo cannot silently fall back to a default.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cktomo/params.hpp"
#include "cktomo/tomography.hpp"

namespace cktomo {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 10.0;
  int n_points = 201;

  std::vector<double> points() const;
};

struct XGrid {
  double x_min = -8.0;
  double x_max = 8.0;
  int n_points = 161;

  std::vector<double> points() const;
};

struct Scenario {
  OscillatorParams params;
  std::complex<double> alpha{0.0, 0.0};
  TimeGrid time_grid;
  std::vector<FrameParams> frames;  // resolved from frames.theta or frames.mu/nu
  XGrid x_grid;
  double tomogram_time = 10.0;  // defaults to time_grid.t_end
  std::vector<std::string> outputs;  // extra artifacts on top of the command's own
  std::uint64_t hash = 0;  // FNV-1a 64 of the canonical effective scenario
};

// Parses and validates a scenario file; throws ScenarioError on unreadable
// files, malformed lines, unknown keys, bad numbers, or degenerate grids.
Scenario parse_scenario(const std::string& path);

// Same, from an in-memory buffer (the file parser delegates here).
Scenario parse_scenario_text(std::string_view text, const std::string& origin);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace cktomo
