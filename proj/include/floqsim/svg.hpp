#pragma once

#include <string>
#include <vector>

namespace floqsim {

/// Heatmap over a rectangular grid; values are clipped to [vmin, vmax]
/// and mapped through a fixed perceptually-uniform ramp. NaN cells are
/// drawn grey.
struct HeatmapSpec {
  std::string title, xlabel, ylabel;
  std::vector<double> xs, ys;
  /// values[i * ys.size() + j] belongs to (xs[i], ys[j]).
  std::vector<double> values;
  double vmin = 0.0, vmax = 1.0;
};

std::string render_heatmap_svg(const HeatmapSpec& spec);

struct LineSeries {
  std::string name;
  std::vector<double> x, y;
};

struct LinePlotSpec {
  std::string title, xlabel, ylabel;
  std::vector<LineSeries> series;
  bool logx = false, logy = false;
};

std::string render_lines_svg(const LinePlotSpec& spec);

}  // namespace floqsim
