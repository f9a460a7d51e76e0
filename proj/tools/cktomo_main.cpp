#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cktomo/csv.hpp"
#include "cktomo/kernels.hpp"
#include "cktomo/moments.hpp"
#include "cktomo/oracle.hpp"
#include "cktomo/params.hpp"
#include "cktomo/scenario.hpp"
#include "cktomo/tomography.hpp"
#include "cktomo/trajectory.hpp"
#include "cktomo/verify.hpp"

namespace fs = std::filesystem;

namespace {

using namespace cktomo;

std::ofstream open_artifact(const fs::path& dir, const char* name) {
  const fs::path path = dir / name;
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  return file;
}

bool single_kick_at_zero(const OscillatorParams& p) {
  return p.kick_times.size() == 1 && p.kick_times.front() == 0.0;
}

void write_trajectory(const Scenario& scen, const fs::path& dir) {
  const std::vector<double> grid = scen.time_grid.points();
  const std::vector<TrajectoryPoint> series = trajectory_series(scen.params, grid);
  const double omega = effective_frequency(scen.params);
  const std::complex<double> target(0.0, 2.0 * omega);

  std::ofstream file = open_artifact(dir, "trajectory.csv");
  csv::Writer writer(file,
                     {"t", "eps_re", "eps_im", "eps_dot_re", "eps_dot_im",
                      "wronskian_defect"},
                     scen.hash);
  double max_defect = 0.0;
  for (const TrajectoryPoint& point : series) {
    const double defect = std::abs(wronskian(point, scen.params.gamma) - target);
    max_defect = std::max(max_defect, defect);
    writer.row({point.t, point.eps.real(), point.eps.imag(), point.eps_dot.real(),
                point.eps_dot.imag(), defect});
  }
  std::cout << "trajectory.csv: " << series.size() << " rows ("
            << regime_name(classify_regime(scen.params))
            << "), max wronskian defect " << csv::format_double(max_defect) << "\n";
}

void write_moments(const Scenario& scen, const fs::path& dir) {
  const std::vector<double> grid = scen.time_grid.points();
  const std::vector<MomentSample> series = moment_series(scen.params, scen.alpha, grid);

  std::ofstream file = open_artifact(dir, "moments.csv");
  csv::Writer writer(file,
                     {"t", "sigma_qq", "sigma_pp", "sigma_qp", "mean_q", "mean_p",
                      "uncertainty_defect"},
                     scen.hash);
  for (const MomentSample& s : series)
    writer.row({s.t, s.second.sigma_qq, s.second.sigma_pp, s.second.sigma_qp,
                s.first.mean_q, s.first.mean_p, s.uncertainty_defect});
  std::cout << "moments.csv: " << series.size() << " rows\n";
}

void write_tomogram(const Scenario& scen, const fs::path& dir) {
  const StateMoments sm = state_moments(scen.params, scen.alpha, scen.tomogram_time);
  const std::vector<double> xs = scen.x_grid.points();
  const TomogramGrid grid = tomogram_grid(sm, scen.frames, xs);
  const std::vector<double> defects = row_normalization_defects(sm, scen.frames);

  std::ofstream file = open_artifact(dir, "tomogram.csv");
  std::vector<std::string> columns = {"mu", "nu", "norm_defect"};
  for (double x : xs) columns.push_back("x=" + csv::format_double(x));
  csv::Writer writer(file, columns, scen.hash);
  double max_defect = 0.0;
  for (std::size_t r = 0; r < scen.frames.size(); ++r) {
    std::vector<double> row = {scen.frames[r].mu, scen.frames[r].nu, defects[r]};
    for (std::size_t c = 0; c < xs.size(); ++c) row.push_back(grid.at(r, c));
    writer.row(row);
    max_defect = std::max(max_defect, defects[r]);
  }
  std::cout << "tomogram.csv: " << scen.frames.size() << " frames x " << xs.size()
            << " points at t = " << csv::format_double(scen.tomogram_time)
            << ", max row defect " << csv::format_double(max_defect) << "\n";
}

void write_squeezing(const Scenario& scen, const fs::path& dir) {
  const std::vector<double> grid = scen.time_grid.points();
  const std::vector<TrajectoryPoint> series = trajectory_series(scen.params, grid);
  const Regime regime = classify_regime(scen.params);
  const bool canonical = single_kick_at_zero(scen.params);

  std::vector<std::string> columns = {"t", "k2"};
  double bound = 0.0;
  if (canonical && regime == Regime::WeakDamping) {
    bound = min_squeezing_weak(scen.params, 1).bound;
    columns.push_back("k2_min_bound");
  } else if (canonical && regime == Regime::FreeParticle) {
    columns.push_back("k2_closed");
  }

  std::ofstream file = open_artifact(dir, "squeezing.csv");
  csv::Writer writer(file, columns, scen.hash);
  double min_k2 = std::numeric_limits<double>::infinity();
  double min_t = grid.empty() ? 0.0 : grid.front();
  for (const TrajectoryPoint& point : series) {
    const double k2 = squeezing_coefficient(point);
    if (k2 < min_k2) {
      min_k2 = k2;
      min_t = point.t;
    }
    std::vector<double> row = {point.t, k2};
    if (canonical && regime == Regime::WeakDamping) row.push_back(bound);
    if (canonical && regime == Regime::FreeParticle)
      row.push_back(k2_free_closed(scen.params, point.t));
    writer.row(row);
  }
  std::cout << "squeezing.csv: " << series.size() << " rows, grid min k2 = "
            << csv::format_double(min_k2) << " at t = " << csv::format_double(min_t)
            << "\n";
  if (canonical && regime == Regime::WeakDamping) {
    const MinSqueezing ms = min_squeezing_weak(scen.params, 1);
    std::cout << "first-period squeezing: numeric min " << csv::format_double(ms.k2_min)
              << " at t = " << csv::format_double(ms.t_min)
              << ", closed-form estimate " << csv::format_double(ms.bound)
              << " (deviation " << csv::format_double(ms.deviation) << ")\n";
  }
}

void write_artifact(const std::string& name, const Scenario& scen, const fs::path& dir) {
  if (name == "trajectory")
    write_trajectory(scen, dir);
  else if (name == "moments")
    write_moments(scen, dir);
  else if (name == "tomogram")
    write_tomogram(scen, dir);
  else if (name == "squeezing")
    write_squeezing(scen, dir);
  else
    throw std::runtime_error("unknown artifact '" + name + "'");
}

int run_data_command(const std::string& command, const std::string& config,
                     const std::string& out_dir) {
  const Scenario scen = parse_scenario(config);
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  std::vector<std::string> artifacts{command};
  for (const std::string& extra : scen.outputs)
    if (extra != command) artifacts.push_back(extra);
  for (const std::string& name : artifacts) write_artifact(name, scen, dir);
  return 0;
}

int run_verify(const std::string& config) {
  const std::vector<CheckResult> results =
      config.empty() ? run_default_matrix() : run_scenario_checks(parse_scenario(config));
  print_check_table(std::cout, results);
  return all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form trajectories, quadrature moments, squeezing and "
               "tomograms of a damped kicked oscillator"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = ".";

  CLI::App* data_commands[4];
  const char* data_names[4] = {"trajectory", "moments", "tomogram", "squeezing"};
  const char* data_descs[4] = {
      "complex trajectory and derivative on the time grid",
      "quadrature moments and centroids on the time grid",
      "tomogram values over the frame x position grid",
      "squeezing coefficient on the time grid"};
  for (int i = 0; i < 4; ++i) {
    data_commands[i] = app.add_subcommand(data_names[i], data_descs[i]);
    data_commands[i]->add_option("--config", config, "scenario file")->required();
    data_commands[i]->add_option("--out", out_dir, "output directory (default .)");
  }
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant suite and print a check table");
  verify_cmd->add_option("--config", config,
                         "scenario file (omit to run the built-in matrix)");
  verify_cmd->add_option("--out", out_dir, "accepted for uniformity; verify writes no files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (verify_cmd->parsed()) {
    try {
      return run_verify(config);
    } catch (const ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const RegimeError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "verification aborted: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    for (int i = 0; i < 4; ++i)
      if (data_commands[i]->parsed()) return run_data_command(data_names[i], config, out_dir);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const RegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;  // unreachable with require_subcommand(1)
}
