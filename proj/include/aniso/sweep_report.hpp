// Shared result type for parameterized experiments: a list of measured
// points, a least-squares log-log slope, and a bounded/blowup verdict.
#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace aniso {

enum class SweepVerdict { bounded, blowup, inconclusive };

inline const char* to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::bounded: return "bounded";
    case SweepVerdict::blowup: return "blowup";
    case SweepVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SweepPoint {
  double scale = 1.0;              // abscissa (dilation scale, lambda, or 2^j)
  std::vector<double> lambda;      // per-axis dilation factors when relevant
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct LogLogFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  double intercept = std::numeric_limits<double>::quiet_NaN();
  double r_squared = std::numeric_limits<double>::quiet_NaN();
  bool valid = false;
};

// Ordinary least squares of log(ratio) against log(scale). A numerically
// constant ordinate reports slope 0 with R^2 = 1 (perfect flat fit).
inline LogLogFit fit_loglog(const std::vector<SweepPoint>& pts) {
  LogLogFit fit;
  std::vector<double> xs, ys;
  for (const auto& p : pts) {
    if (p.scale > 0.0 && p.ratio > 0.0 && std::isfinite(p.ratio)) {
      xs.push_back(std::log(p.scale));
      ys.push_back(std::log(p.ratio));
    }
  }
  if (xs.size() < 2) return fit;
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy <= 1e-24) {
    fit.slope = 0.0;
    fit.r_squared = 1.0;
  } else {
    const double ss_res = syy - sxy * sxy / sxx;
    fit.r_squared = 1.0 - ss_res / syy;
  }
  fit.valid = true;
  return fit;
}

struct SweepReport {
  std::string kind;
  std::vector<SweepPoint> points;
  LogLogFit fit;
  double max_ratio = 0.0;
  SweepVerdict verdict = SweepVerdict::inconclusive;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> metadata;  // ordered for determinism

  void finalize_ratios() {
    max_ratio = 0.0;
    for (const auto& p : points) max_ratio = std::max(max_ratio, p.ratio);
  }
};

}  // namespace aniso
