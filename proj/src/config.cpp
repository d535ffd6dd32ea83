#include "floqsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "floqsim/errors.hpp"

namespace floqsim {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(x))
      throw ConfigError("bad value");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects a finite number, got '" +
                      v + "'");
  }
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw ConfigError("bad value");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects an integer, got '" +
                      v + "'");
  }
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Axis storage: axes are created on demand when any sweep key appears.
SweepAxis& axis_slot(RunConfig& cfg, int n) {
  while (static_cast<int>(cfg.axes.size()) < n) cfg.axes.push_back({});
  return cfg.axes[n - 1];
}

}  // namespace

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " is not 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config: empty key on line " + std::to_string(lineno));
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_kv_text(ss.str());
}

void apply_kv(RunConfig& cfg, const std::string& key,
              const std::string& value) {
  PointConfig& pt = cfg.point;
  if (key == "model.eps0") pt.model.eps0 = parse_double(key, value);
  else if (key == "model.delta1") pt.model.delta1 = parse_double(key, value);
  else if (key == "model.delta2") pt.model.delta2 = parse_double(key, value);
  else if (key == "model.j") pt.model.j = parse_double(key, value);
  else if (key == "drive.amplitude")
    pt.drive.amplitude = parse_double(key, value);
  else if (key == "drive.omega") {
    pt.drive.omega = parse_double(key, value);
    pt.model.omega = pt.drive.omega;
  } else if (key == "bath.kappa") pt.bath.kappa = parse_double(key, value);
  else if (key == "bath.temperature")
    pt.bath.temperature = parse_double(key, value);
  else if (key == "bath.cutoff") pt.bath.cutoff = parse_double(key, value);
  else if (key == "bath.gamma1") pt.bath.gamma1 = parse_double(key, value);
  else if (key == "bath.xi") pt.bath.xi = parse_double(key, value);
  else if (key == "numerics.kmax")
    pt.num.kmax = static_cast<int>(parse_long(key, value));
  else if (key == "numerics.rk_tol") pt.num.rk_tol = parse_double(key, value);
  else if (key == "numerics.ramp_steps")
    pt.num.ramp_steps = static_cast<int>(parse_long(key, value));
  else if (key == "numerics.ramp_tol")
    pt.num.ramp_tol = parse_double(key, value);
  else if (key == "numerics.null_tol")
    pt.num.null_tol = parse_double(key, value);
  else if (key == "numerics.horizon") pt.num.horizon = parse_long(key, value);
  else if (key == "numerics.stride") pt.num.stride = parse_long(key, value);
  else if (key == "sweep.axis") axis_slot(cfg, 1).name = value;
  else if (key == "sweep.min") axis_slot(cfg, 1).min = parse_double(key, value);
  else if (key == "sweep.max") axis_slot(cfg, 1).max = parse_double(key, value);
  else if (key == "sweep.steps") {
    axis_slot(cfg, 1).steps = static_cast<int>(parse_long(key, value));
    if (axis_slot(cfg, 1).steps < 1)
      throw ConfigError("config: sweep steps must be >= 1");
  }
  else if (key == "sweep.axis2") axis_slot(cfg, 2).name = value;
  else if (key == "sweep.min2")
    axis_slot(cfg, 2).min = parse_double(key, value);
  else if (key == "sweep.max2")
    axis_slot(cfg, 2).max = parse_double(key, value);
  else if (key == "sweep.steps2") {
    axis_slot(cfg, 2).steps = static_cast<int>(parse_long(key, value));
    if (axis_slot(cfg, 2).steps < 1)
      throw ConfigError("config: sweep steps must be >= 1");
  }
  else if (key == "output.thin") {
    if (value != "none" && value != "log")
      throw ConfigError("config: output.thin must be none or log");
    cfg.thin = value;
  } else if (key == "output.trace_points")
    cfg.trace_points = static_cast<int>(parse_long(key, value));
  else
    throw ConfigError("config: unknown key '" + key + "'");
}

static void validate(RunConfig& cfg) {
  if (cfg.axes.size() > 2)
    throw ConfigError("config: at most two sweep axes");
  for (SweepAxis& ax : cfg.axes) {
    if (ax.name != "A" && ax.name != "eps0" && ax.name != "xi" &&
        ax.name != "J")
      throw ConfigError("config: sweep axis must be one of A, eps0, xi, J");
    if (ax.steps == 0) ax.steps = cfg.axes.size() == 2 ? 40 : 101;
    if (ax.steps < 1) throw ConfigError("config: sweep steps must be >= 1");
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max))
      throw ConfigError("config: sweep range must be finite");
  }
  const PointConfig& pt = cfg.point;
  if (pt.model.delta1 <= 0.0 || pt.model.delta2 <= 0.0)
    throw ConfigError("config: tunnel splittings must be positive");
  if (pt.model.omega <= 0.0)
    throw ConfigError("config: drive frequency must be positive");
  if (pt.drive.amplitude < 0.0)
    throw ConfigError("config: drive amplitude must be non-negative");
  if (pt.bath.kappa <= 0.0 || pt.bath.temperature <= 0.0 ||
      pt.bath.cutoff <= 0.0)
    throw ConfigError("config: bath kappa, temperature, cutoff must be > 0");
  if (pt.num.horizon < 1 || pt.num.stride < 1)
    throw ConfigError("config: horizon and stride must be >= 1");
}

RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const std::vector<std::string>& overrides) {
  RunConfig cfg;
  // Off-resonance working point of the strongly driven pair.
  cfg.point.model = ModelParams{3.7, 0.1, 0.15, -2.5, 1.0};
  cfg.point.drive = DriveParams{3.8, 1.0};
  cfg.point.bath = BathParams{0.001, 0.00467, 10.0, 1.0, 0.1};

  if (config_path) {
    for (const auto& [k, v] : parse_kv_file(*config_path)) apply_kv(cfg, k, v);
  }
  for (const std::string& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set expects key=value, got '" + ov + "'");
    std::string key = ov.substr(0, eq);
    std::string value = ov.substr(eq + 1);
    // reuse the file-format trimming rules
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
      key.pop_back();
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t'))
      value.erase(value.begin());
    apply_kv(cfg, key, value);
  }
  validate(cfg);
  return cfg;
}

std::vector<std::pair<std::string, std::string>> dump_config(
    const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  const PointConfig& pt = cfg.point;
  out.emplace_back("bath.cutoff", format_g17(pt.bath.cutoff));
  out.emplace_back("bath.gamma1", format_g17(pt.bath.gamma1));
  out.emplace_back("bath.kappa", format_g17(pt.bath.kappa));
  out.emplace_back("bath.temperature", format_g17(pt.bath.temperature));
  out.emplace_back("bath.xi", format_g17(pt.bath.xi));
  out.emplace_back("drive.amplitude", format_g17(pt.drive.amplitude));
  out.emplace_back("drive.omega", format_g17(pt.drive.omega));
  out.emplace_back("model.delta1", format_g17(pt.model.delta1));
  out.emplace_back("model.delta2", format_g17(pt.model.delta2));
  out.emplace_back("model.eps0", format_g17(pt.model.eps0));
  out.emplace_back("model.j", format_g17(pt.model.j));
  out.emplace_back("numerics.horizon", std::to_string(pt.num.horizon));
  out.emplace_back("numerics.kmax", std::to_string(pt.num.kmax));
  out.emplace_back("numerics.null_tol", format_g17(pt.num.null_tol));
  out.emplace_back("numerics.ramp_steps", std::to_string(pt.num.ramp_steps));
  out.emplace_back("numerics.ramp_tol", format_g17(pt.num.ramp_tol));
  out.emplace_back("numerics.rk_tol", format_g17(pt.num.rk_tol));
  out.emplace_back("numerics.stride", std::to_string(pt.num.stride));
  out.emplace_back("output.thin", cfg.thin);
  out.emplace_back("output.trace_points", std::to_string(cfg.trace_points));
  for (size_t i = 0; i < cfg.axes.size(); ++i) {
    const std::string suffix = i == 0 ? "" : "2";
    out.emplace_back("sweep.axis" + suffix, cfg.axes[i].name);
    out.emplace_back("sweep.min" + suffix, format_g17(cfg.axes[i].min));
    out.emplace_back("sweep.max" + suffix, format_g17(cfg.axes[i].max));
    out.emplace_back("sweep.steps" + suffix,
                     std::to_string(cfg.axes[i].steps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void set_axis_value(PointConfig& point, const std::string& axis, double v) {
  if (axis == "A") point.drive.amplitude = v;
  else if (axis == "eps0") point.model.eps0 = v;
  else if (axis == "xi") point.bath.xi = v;
  else if (axis == "J") point.model.j = v;
  else throw ConfigError("unknown sweep axis '" + axis + "'");
}

}  // namespace floqsim
