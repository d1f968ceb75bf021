// Self-contained SVG emission for sweep plots: log-log scatter with the
// fitted power law, and linear/log series plots for time diagnostics.
// No external plotting runtime; output is deterministic text.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "aniso/sweep_report.hpp"

namespace aniso {

namespace svg_detail {

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Frame {
  double x0 = 80, y0 = 40, w = 520, h = 380;  // plot area in a 640x480 canvas
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

inline void expand(double& lo, double& hi) {
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  } else {
    const double pad = 0.06 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
}

inline std::string header(const std::string& title) {
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
       "viewBox=\"0 0 640 480\">\n";
  s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + title + "</text>\n";
  return s;
}

inline std::string axes(const Frame& f, const std::string& xlabel,
                        const std::string& ylabel, bool log_x, bool log_y) {
  std::string s;
  s += "<rect x=\"" + num(f.x0) + "\" y=\"" + num(f.y0) + "\" width=\"" + num(f.w) +
       "\" height=\"" + num(f.h) + "\" fill=\"none\" stroke=\"#333\"/>\n";
  auto ticks = [&](bool horizontal) {
    std::string t;
    const double lo = horizontal ? f.xmin : f.ymin;
    const double hi = horizontal ? f.xmax : f.ymax;
    const bool logscale = horizontal ? log_x : log_y;
    const int n = 5;
    for (int i = 0; i <= n; ++i) {
      const double v = lo + (hi - lo) * i / n;
      const double label = logscale ? std::pow(10.0, v) : v;
      if (horizontal) {
        const double x = f.px(v);
        t += "<line x1=\"" + num(x) + "\" y1=\"" + num(f.y0 + f.h) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(f.y0 + f.h + 5) + "\" stroke=\"#333\"/>\n";
        t += "<text x=\"" + num(x) + "\" y=\"" + num(f.y0 + f.h + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
             num(label) + "</text>\n";
      } else {
        const double y = f.py(v);
        t += "<line x1=\"" + num(f.x0 - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(f.x0) +
             "\" y2=\"" + num(y) + "\" stroke=\"#333\"/>\n";
        t += "<text x=\"" + num(f.x0 - 8) + "\" y=\"" + num(y + 3) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
             num(label) + "</text>\n";
      }
    }
    return t;
  };
  s += ticks(true);
  s += ticks(false);
  s += "<text x=\"" + num(f.x0 + f.w / 2) + "\" y=\"470\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\" font-size=\"12\">" + xlabel + "</text>\n";
  s += "<text x=\"16\" y=\"" + num(f.y0 + f.h / 2) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       "transform=\"rotate(-90 16 " + num(f.y0 + f.h / 2) + ")\">" + ylabel + "</text>\n";
  return s;
}

}  // namespace svg_detail

// Log-log ratio plot with the fitted slope line and annotation.
inline std::string svg_loglog_sweep(const SweepReport& rep, const std::string& title,
                                    const std::string& xlabel = "scale",
                                    const std::string& ylabel = "ratio") {
  using namespace svg_detail;
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : rep.points)
    if (p.scale > 0 && p.ratio > 0 && std::isfinite(p.ratio))
      pts.emplace_back(std::log10(p.scale), std::log10(p.ratio));

  Frame f;
  if (!pts.empty()) {
    f.xmin = f.xmax = pts[0].first;
    f.ymin = f.ymax = pts[0].second;
    for (const auto& [x, y] : pts) {
      f.xmin = std::min(f.xmin, x);
      f.xmax = std::max(f.xmax, x);
      f.ymin = std::min(f.ymin, y);
      f.ymax = std::max(f.ymax, y);
    }
  }
  expand(f.xmin, f.xmax);
  expand(f.ymin, f.ymax);

  std::string s = header(title);
  s += axes(f, xlabel + " (log)", ylabel + " (log)", true, true);
  if (rep.fit.valid) {
    const double c = std::log10(std::exp(1.0));
    // y = slope * x + intercept in natural logs; convert to base 10.
    const double y1 = rep.fit.slope * (f.xmin / c) * c + rep.fit.intercept * c;
    const double y2 = rep.fit.slope * (f.xmax / c) * c + rep.fit.intercept * c;
    s += "<line x1=\"" + num(f.px(f.xmin)) + "\" y1=\"" + num(f.py(y1)) + "\" x2=\"" +
         num(f.px(f.xmax)) + "\" y2=\"" + num(f.py(y2)) +
         "\" stroke=\"#c44\" stroke-width=\"1.5\"/>\n";
    s += "<text x=\"" + num(f.x0 + 10) + "\" y=\"" + num(f.y0 + 16) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c44\">slope " +
         num(rep.fit.slope) + ", R2 " + num(rep.fit.r_squared) + ", " +
         to_string(rep.verdict) + "</text>\n";
  }
  for (const auto& [x, y] : pts)
    s += "<circle cx=\"" + num(f.px(x)) + "\" cy=\"" + num(f.py(y)) +
         "\" r=\"3.5\" fill=\"#246\"/>\n";
  s += "</svg>\n";
  return s;
}

// Plain series plot (optionally log1p-magnitude y) for time diagnostics.
inline std::string svg_series(const std::vector<std::pair<double, double>>& series,
                              const std::string& title, const std::string& xlabel,
                              const std::string& ylabel, bool log_abs_y = false) {
  using namespace svg_detail;
  std::vector<std::pair<double, double>> pts;
  for (const auto& [x, y] : series) {
    const double yy = log_abs_y ? std::log10(std::max(std::abs(y), 1e-18)) : y;
    pts.emplace_back(x, yy);
  }
  Frame f;
  if (!pts.empty()) {
    f.xmin = f.xmax = pts[0].first;
    f.ymin = f.ymax = pts[0].second;
    for (const auto& [x, y] : pts) {
      f.xmin = std::min(f.xmin, x);
      f.xmax = std::max(f.xmax, x);
      f.ymin = std::min(f.ymin, y);
      f.ymax = std::max(f.ymax, y);
    }
  }
  expand(f.xmin, f.xmax);
  expand(f.ymin, f.ymax);

  std::string s = header(title);
  s += axes(f, xlabel, log_abs_y ? ylabel + " (log10 |.|)" : ylabel, false, log_abs_y);
  std::string poly = "<polyline fill=\"none\" stroke=\"#246\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts)
    poly += num(f.px(x)) + "," + num(f.py(y)) + " ";
  poly += "\"/>\n";
  s += poly;
  for (const auto& [x, y] : pts)
    s += "<circle cx=\"" + num(f.px(x)) + "\" cy=\"" + num(f.py(y)) +
         "\" r=\"3\" fill=\"#246\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace aniso
