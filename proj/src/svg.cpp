#include "floqsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace floqsim {

namespace {

// viridis anchors every 1/8th of the range.
const int kRamp[9][3] = {{68, 1, 84},    {71, 45, 123},  {59, 82, 139},
                         {44, 114, 142}, {33, 145, 140}, {39, 173, 129},
                         {94, 201, 98},  {173, 220, 48}, {253, 231, 37}};

std::string ramp_color(double t) {
  if (std::isnan(t)) return "#bbbbbb";
  t = std::clamp(t, 0.0, 1.0);
  const double x = t * 8.0;
  const int i = std::min(7, static_cast<int>(x));
  const double f = x - i;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(kRamp[i][0] +
                                             f * (kRamp[i + 1][0] - kRamp[i][0]))),
                static_cast<int>(std::lround(kRamp[i][1] +
                                             f * (kRamp[i + 1][1] - kRamp[i][1]))),
                static_cast<int>(std::lround(kRamp[i][2] +
                                             f * (kRamp[i + 1][2] - kRamp[i][2]))));
  return buf;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                           "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

struct Frame {
  double x0, y0, w, h;  // plot area in svg coordinates
  double xmin, xmax, ymin, ymax;

  double sx(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double sy(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void axis_ticks(std::ostringstream& os, const Frame& fr) {
  for (int i = 0; i <= 4; ++i) {
    const double xv = fr.xmin + (fr.xmax - fr.xmin) * i / 4.0;
    const double yv = fr.ymin + (fr.ymax - fr.ymin) * i / 4.0;
    const double px = fr.sx(xv);
    const double py = fr.sy(yv);
    os << "<line x1='" << px << "' y1='" << fr.y0 + fr.h << "' x2='" << px
       << "' y2='" << fr.y0 + fr.h + 5 << "' stroke='black'/>\n";
    os << "<text x='" << px << "' y='" << fr.y0 + fr.h + 18
       << "' font-size='11' text-anchor='middle'>" << fmt(xv) << "</text>\n";
    os << "<line x1='" << fr.x0 - 5 << "' y1='" << py << "' x2='" << fr.x0
       << "' y2='" << py << "' stroke='black'/>\n";
    os << "<text x='" << fr.x0 - 8 << "' y='" << py + 4
       << "' font-size='11' text-anchor='end'>" << fmt(yv) << "</text>\n";
  }
}

void labels(std::ostringstream& os, const Frame& fr, const std::string& title,
            const std::string& xlabel, const std::string& ylabel) {
  os << "<text x='" << fr.x0 + fr.w / 2 << "' y='" << fr.y0 - 10
     << "' font-size='14' text-anchor='middle'>" << title << "</text>\n";
  os << "<text x='" << fr.x0 + fr.w / 2 << "' y='" << fr.y0 + fr.h + 34
     << "' font-size='12' text-anchor='middle'>" << xlabel << "</text>\n";
  os << "<text x='" << fr.x0 - 42 << "' y='" << fr.y0 + fr.h / 2
     << "' font-size='12' text-anchor='middle' transform='rotate(-90 "
     << fr.x0 - 42 << " " << fr.y0 + fr.h / 2 << ")'>" << ylabel
     << "</text>\n";
}

}  // namespace

std::string render_heatmap_svg(const HeatmapSpec& spec) {
  const int nx = static_cast<int>(spec.xs.size());
  const int ny = static_cast<int>(spec.ys.size());
  const Frame fr{60.0,
                 30.0,
                 420.0,
                 420.0,
                 spec.xs.front(),
                 spec.xs.back(),
                 spec.ys.front(),
                 spec.ys.back()};
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='560' height='500' "
        "font-family='sans-serif'>\n";
  os << "<rect width='560' height='500' fill='white'/>\n";

  // cell sizes from midpoints so single-row/column grids still render
  const double dx = nx > 1 ? fr.w / (nx - 1) : fr.w;
  const double dy = ny > 1 ? fr.h / (ny - 1) : fr.h;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const double v = spec.values[i * ny + j];
      const double t = (v - spec.vmin) / (spec.vmax - spec.vmin);
      const double cx = nx > 1 ? fr.sx(spec.xs[i]) : fr.x0 + fr.w / 2;
      const double cy = ny > 1 ? fr.sy(spec.ys[j]) : fr.y0 + fr.h / 2;
      os << "<rect x='" << cx - dx / 2 << "' y='" << cy - dy / 2
         << "' width='" << dx + 0.5 << "' height='" << dy + 0.5 << "' fill='"
         << ramp_color(t) << "'/>\n";
    }

  os << "<rect x='" << fr.x0 << "' y='" << fr.y0 << "' width='" << fr.w
     << "' height='" << fr.h << "' fill='none' stroke='black'/>\n";
  axis_ticks(os, fr);
  labels(os, fr, spec.title, spec.xlabel, spec.ylabel);

  // colorbar
  const double bx = fr.x0 + fr.w + 20, bw = 16, bh = fr.h;
  const int nseg = 64;
  for (int s = 0; s < nseg; ++s) {
    const double t0 = static_cast<double>(s) / nseg;
    os << "<rect x='" << bx << "' y='" << fr.y0 + bh * (1.0 - t0) - bh / nseg
       << "' width='" << bw << "' height='" << bh / nseg + 0.5 << "' fill='"
       << ramp_color(t0) << "'/>\n";
  }
  os << "<rect x='" << bx << "' y='" << fr.y0 << "' width='" << bw
     << "' height='" << bh << "' fill='none' stroke='black'/>\n";
  os << "<text x='" << bx + bw + 4 << "' y='" << fr.y0 + bh + 4
     << "' font-size='11'>" << fmt(spec.vmin) << "</text>\n";
  os << "<text x='" << bx + bw + 4 << "' y='" << fr.y0 + 10
     << "' font-size='11'>" << fmt(spec.vmax) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_lines_svg(const LinePlotSpec& spec) {
  auto tx = [&](double x) {
    return spec.logx ? std::log10(std::max(x, 1e-300)) : x;
  };
  auto ty = [&](double y) {
    return spec.logy ? std::log10(std::max(y, 1e-300)) : y;
  };

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const LineSeries& s : spec.series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double x = tx(s.x[i]);
      const double y = ty(s.y[i]);
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (xmin >= xmax) { xmin -= 0.5; xmax += 0.5; }
  if (ymin >= ymax) { ymin -= 0.5; ymax += 0.5; }
  const double pad = 0.05 * (ymax - ymin);
  const Frame fr{60.0, 30.0, 440.0, 400.0, xmin, xmax, ymin - pad,
                 ymax + pad};

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='560' height='500' "
        "font-family='sans-serif'>\n";
  os << "<rect width='560' height='500' fill='white'/>\n";
  int ci = 0;
  for (const LineSeries& s : spec.series) {
    os << "<polyline fill='none' stroke='" << kPalette[ci % 8]
       << "' stroke-width='1.5' points='";
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double x = tx(s.x[i]);
      const double y = ty(s.y[i]);
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      os << fr.sx(x) << "," << fr.sy(y) << " ";
    }
    os << "'/>\n";
    os << "<text x='" << fr.x0 + fr.w - 4 << "' y='"
       << fr.y0 + 14 + 14 * ci << "' font-size='11' text-anchor='end' fill='"
       << kPalette[ci % 8] << "'>" << s.name << "</text>\n";
    ++ci;
  }
  os << "<rect x='" << fr.x0 << "' y='" << fr.y0 << "' width='" << fr.w
     << "' height='" << fr.h << "' fill='none' stroke='black'/>\n";
  axis_ticks(os, fr);
  labels(os, fr,
         spec.title,
         spec.logx ? "log10 " + spec.xlabel : spec.xlabel,
         spec.logy ? "log10 " + spec.ylabel : spec.ylabel);
  os << "</svg>\n";
  return os.str();
}

}  // namespace floqsim
