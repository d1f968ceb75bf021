// Sampled real fields and their Fourier-side counterparts.
// Fields are immutable values in spirit: operations return new fields.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "aniso/grid.hpp"

namespace aniso {

struct RealField {
  GridSpec grid;
  std::vector<double> values;

  RealField() = default;
  explicit RealField(const GridSpec& g)
      : grid(g), values(static_cast<std::size_t>(g.point_count()), 0.0) {}
  RealField(const GridSpec& g, std::vector<double> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid.point_count()))
      throw std::invalid_argument("RealField: value count mismatch");
  }

  double& at(int i1, int i2 = 0, int i3 = 0) {
    return values[static_cast<std::size_t>(grid.flat_index(i1, i2, i3))];
  }
  double at(int i1, int i2 = 0, int i3 = 0) const {
    return values[static_cast<std::size_t>(grid.flat_index(i1, i2, i3))];
  }

  bool all_finite() const {
    for (double v : values)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

struct SpectralField {
  GridSpec grid;
  std::vector<std::complex<double>> coeffs;  // FFT storage order per axis

  SpectralField() = default;
  explicit SpectralField(const GridSpec& g)
      : grid(g), coeffs(static_cast<std::size_t>(g.point_count()), {0.0, 0.0}) {}
  SpectralField(const GridSpec& g, std::vector<std::complex<double>> c)
      : grid(g), coeffs(std::move(c)) {
    if (coeffs.size() != static_cast<std::size_t>(grid.point_count()))
      throw std::invalid_argument("SpectralField: coefficient count mismatch");
  }

  std::complex<double>& at(int i1, int i2 = 0, int i3 = 0) {
    return coeffs[static_cast<std::size_t>(grid.flat_index(i1, i2, i3))];
  }
  std::complex<double> at(int i1, int i2 = 0, int i3 = 0) const {
    return coeffs[static_cast<std::size_t>(grid.flat_index(i1, i2, i3))];
  }
};

// Visit every grid point: fn(flat_index, i1, i2, i3).
template <typename Fn>
inline void for_each_index(const GridSpec& g, Fn&& fn) {
  const int n1 = g.sizes[0];
  const int n2 = g.n >= 2 ? g.sizes[1] : 1;
  const int n3 = g.n >= 3 ? g.sizes[2] : 1;
  std::int64_t idx = 0;
  for (int i3 = 0; i3 < n3; ++i3)
    for (int i2 = 0; i2 < n2; ++i2)
      for (int i1 = 0; i1 < n1; ++i1, ++idx) fn(idx, i1, i2, i3);
}

// Sample f(x1[,x2[,x3]]) with coordinates in [0, L) per axis.
template <typename Fn>
inline RealField sample_field(const GridSpec& g, Fn&& fn) {
  RealField f(g);
  const double h1 = g.spacing(0);
  const double h2 = g.n >= 2 ? g.spacing(1) : 0.0;
  const double h3 = g.n >= 3 ? g.spacing(2) : 0.0;
  for_each_index(g, [&](std::int64_t idx, int i1, int i2, int i3) {
    f.values[static_cast<std::size_t>(idx)] = fn(i1 * h1, i2 * h2, i3 * h3);
  });
  return f;
}

inline RealField map_values(const RealField& f, const std::function<double(double)>& fn) {
  RealField out(f.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = fn(f.values[i]);
  return out;
}

inline RealField operator+(const RealField& a, const RealField& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("field +: grid mismatch");
  RealField out(a.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a.values[i] + b.values[i];
  return out;
}

inline RealField operator-(const RealField& a, const RealField& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("field -: grid mismatch");
  RealField out(a.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a.values[i] - b.values[i];
  return out;
}

inline RealField operator*(double c, const RealField& a) {
  RealField out(a.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = c * a.values[i];
  return out;
}

inline RealField abs(const RealField& f) {
  RealField out(f.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = std::abs(f.values[i]);
  return out;
}

inline double max_abs(const RealField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const RealField& a, const RealField& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace aniso
