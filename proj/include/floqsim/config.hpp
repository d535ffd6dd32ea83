#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floqsim/pipeline.hpp"

namespace floqsim {

/// One sweep axis; name is one of A, eps0, xi, J.
struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;  ///< 0 = desk-scale default (101 line / 40 per plane axis)

  double value_at(int i) const {
    return steps <= 1 ? min : min + (max - min) * i / (steps - 1);
  }
};

/// Resolved run configuration: a base parameter point, up to two sweep
/// axes, and output controls.
struct RunConfig {
  PointConfig point;
  std::vector<SweepAxis> axes;
  std::string thin = "none";  ///< trace thinning: none | log
  int trace_points = 500;     ///< targeted points for thinned traces
};

/// Parses the flat key-value format: one `section.key = value` per line,
/// '#' comments, UTF-8. Throws ConfigError on malformed lines.
std::map<std::string, std::string> parse_kv_text(const std::string& text);
std::map<std::string, std::string> parse_kv_file(const std::string& path);

/// Applies one key; unknown keys or unparsable values raise ConfigError.
void apply_kv(RunConfig& cfg, const std::string& key,
              const std::string& value);

/// File values first (if any), then --set overrides in order.
RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const std::vector<std::string>& overrides);

/// Canonical echo of every setting, sorted by key; the provenance block.
std::vector<std::pair<std::string, std::string>> dump_config(
    const RunConfig& cfg);

/// Writes a swept quantity into the base point (A, eps0, xi, J).
void set_axis_value(PointConfig& point, const std::string& axis, double v);

}  // namespace floqsim
