#include "cktomo/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "cktomo/csv.hpp"

namespace cktomo {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, const std::string& key) {
  const std::string buf(trim(token));
  if (buf.empty()) throw ScenarioError("empty number in value of '" + key + "'");
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size())
    throw ScenarioError("bad number '" + buf + "' in value of '" + key + "'");
  if (!std::isfinite(v))
    throw ScenarioError("non-finite number '" + buf + "' in value of '" + key + "'");
  return v;
}

int parse_count(std::string_view token, const std::string& key) {
  const double v = parse_number(token, key);
  const int n = static_cast<int>(v);
  if (static_cast<double>(n) != v || n < 1)
    throw ScenarioError("'" + key + "' must be an integer >= 1");
  return n;
}

std::vector<double> parse_list(std::string_view value, const std::string& key) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.find(',', start);
    out.push_back(parse_number(value.substr(start, comma - start), key));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> pts(static_cast<std::size_t>(n));
  if (n == 1) {
    pts[0] = lo;
    return pts;
  }
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = lo + h * i;
  pts.back() = hi;
  return pts;
}

const char* const kArtifacts[] = {"trajectory", "moments", "tomogram", "squeezing"};

}  // namespace

std::vector<double> TimeGrid::points() const { return linspace(t_start, t_end, n_points); }

std::vector<double> XGrid::points() const { return linspace(x_min, x_max, n_points); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Scenario parse_scenario_text(std::string_view text, const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ScenarioError(origin + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty())
      throw ScenarioError(origin + ":" + std::to_string(line_no) + ": empty key");
    if (value.empty())
      throw ScenarioError(origin + ":" + std::to_string(line_no) + ": empty value for '" + key + "'");
    if (!kv.emplace(key, value).second)
      throw ScenarioError(origin + ": duplicate key '" + key + "'");
  }

  auto take = [&kv](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    return &it->second;
  };
  auto require = [&](const char* key) -> const std::string& {
    const std::string* v = take(key);
    if (!v) throw ScenarioError(origin + ": missing required key '" + std::string(key) + "'");
    return *v;
  };

  Scenario scen;
  scen.params.omega0 = parse_number(require("params.omega0"), "params.omega0");
  scen.params.gamma = parse_number(require("params.gamma"), "params.gamma");
  scen.params.kappa = parse_number(require("params.kappa"), "params.kappa");
  if (const std::string* v = take("params.kick_times"))
    scen.params.kick_times = parse_list(*v, "params.kick_times");

  if (const std::string* v = take("alpha.re")) scen.alpha.real(parse_number(*v, "alpha.re"));
  if (const std::string* v = take("alpha.im")) scen.alpha.imag(parse_number(*v, "alpha.im"));

  if (const std::string* v = take("time_grid.t_start"))
    scen.time_grid.t_start = parse_number(*v, "time_grid.t_start");
  if (const std::string* v = take("time_grid.t_end"))
    scen.time_grid.t_end = parse_number(*v, "time_grid.t_end");
  if (const std::string* v = take("time_grid.n_points"))
    scen.time_grid.n_points = parse_count(*v, "time_grid.n_points");

  if (const std::string* v = take("x_grid.x_min"))
    scen.x_grid.x_min = parse_number(*v, "x_grid.x_min");
  if (const std::string* v = take("x_grid.x_max"))
    scen.x_grid.x_max = parse_number(*v, "x_grid.x_max");
  if (const std::string* v = take("x_grid.n_points"))
    scen.x_grid.n_points = parse_count(*v, "x_grid.n_points");

  const std::string* theta = take("frames.theta");
  const std::string* mu = take("frames.mu");
  const std::string* nu = take("frames.nu");
  if (theta && (mu || nu))
    throw ScenarioError(origin + ": give frames.theta or frames.mu/frames.nu, not both");
  if (static_cast<bool>(mu) != static_cast<bool>(nu))
    throw ScenarioError(origin + ": frames.mu and frames.nu must be given together");
  if (theta) {
    for (double th : parse_list(*theta, "frames.theta"))
      scen.frames.push_back({std::cos(th), std::sin(th)});
  } else if (mu) {
    const std::vector<double> mus = parse_list(*mu, "frames.mu");
    const std::vector<double> nus = parse_list(*nu, "frames.nu");
    if (mus.size() != nus.size())
      throw ScenarioError(origin + ": frames.mu and frames.nu must have equal length");
    for (std::size_t i = 0; i < mus.size(); ++i) scen.frames.push_back({mus[i], nus[i]});
  } else {
    for (double th : {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0})
      scen.frames.push_back({std::cos(th), std::sin(th)});
  }

  scen.tomogram_time = scen.time_grid.t_end;
  if (const std::string* v = take("tomogram.time"))
    scen.tomogram_time = parse_number(*v, "tomogram.time");

  if (const std::string* v = take("outputs")) {
    std::size_t start = 0;
    const std::string_view sv(*v);
    while (true) {
      const std::size_t comma = sv.find(',', start);
      const std::string name(trim(sv.substr(start, comma - start)));
      if (std::find(std::begin(kArtifacts), std::end(kArtifacts), name) ==
          std::end(kArtifacts))
        throw ScenarioError(origin + ": unknown artifact '" + name + "' in outputs");
      if (std::find(scen.outputs.begin(), scen.outputs.end(), name) == scen.outputs.end())
        scen.outputs.push_back(name);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  static const char* const known[] = {
      "params.omega0",    "params.gamma",    "params.kappa",    "params.kick_times",
      "alpha.re",         "alpha.im",        "time_grid.t_start", "time_grid.t_end",
      "time_grid.n_points", "x_grid.x_min",  "x_grid.x_max",    "x_grid.n_points",
      "frames.theta",     "frames.mu",       "frames.nu",       "tomogram.time",
      "outputs"};
  for (const auto& [key, value] : kv) {
    (void)value;
    if (std::find_if(std::begin(known), std::end(known),
                     [&key](const char* k) { return key == k; }) == std::end(known))
      throw ScenarioError(origin + ": unknown key '" + key + "'");
  }

  try {
    scen.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(origin + ": " + e.what());
  }
  if (scen.time_grid.n_points > 1 && !(scen.time_grid.t_end > scen.time_grid.t_start))
    throw ScenarioError(origin + ": time_grid.t_end must exceed time_grid.t_start");
  if (scen.x_grid.n_points > 1 && !(scen.x_grid.x_max > scen.x_grid.x_min))
    throw ScenarioError(origin + ": x_grid.x_max must exceed x_grid.x_min");
  if (!std::isfinite(scen.tomogram_time))
    throw ScenarioError(origin + ": tomogram.time must be finite");

  // Hash the canonical effective scenario (defaults applied, fixed order,
  // %.17g floats) so formatting and comments do not perturb provenance.
  std::ostringstream canon;
  auto put = [&canon](const char* key, double v) {
    canon << key << '=' << csv::format_double(v) << ';';
  };
  put("params.omega0", scen.params.omega0);
  put("params.gamma", scen.params.gamma);
  put("params.kappa", scen.params.kappa);
  canon << "params.kick_times=";
  for (std::size_t i = 0; i < scen.params.kick_times.size(); ++i) {
    if (i > 0) canon << ',';
    canon << csv::format_double(scen.params.kick_times[i]);
  }
  canon << ';';
  put("alpha.re", scen.alpha.real());
  put("alpha.im", scen.alpha.imag());
  put("time_grid.t_start", scen.time_grid.t_start);
  put("time_grid.t_end", scen.time_grid.t_end);
  canon << "time_grid.n_points=" << scen.time_grid.n_points << ';';
  put("x_grid.x_min", scen.x_grid.x_min);
  put("x_grid.x_max", scen.x_grid.x_max);
  canon << "x_grid.n_points=" << scen.x_grid.n_points << ';';
  canon << "frames=";
  for (std::size_t i = 0; i < scen.frames.size(); ++i) {
    if (i > 0) canon << ',';
    canon << csv::format_double(scen.frames[i].mu) << ':'
          << csv::format_double(scen.frames[i].nu);
  }
  canon << ';';
  put("tomogram.time", scen.tomogram_time);
  canon << "outputs=";
  for (std::size_t i = 0; i < scen.outputs.size(); ++i) {
    if (i > 0) canon << ',';
    canon << scen.outputs[i];
  }
  canon << ';';
  scen.hash = fnv1a64(canon.str());
  return scen;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

}  // namespace cktomo
