// Spectral fractional calculus: |xi|^s and |xi_i|^s multipliers, gradients,
// and mixed partial derivatives. The zero mode is annihilated for s > 0
// (homogeneous operators act modulo constants); odd derivatives zero the
// Nyquist mode to keep real fields real.
#pragma once

#include <array>
#include <cmath>

#include "aniso/fft.hpp"

namespace aniso {

inline RealField fractional_laplacian(const RealField& f, double s) {
  if (s < 0.0)
    throw std::invalid_argument("fractional_laplacian: s must be >= 0");
  if (s == 0.0) return f;
  return apply_real_multiplier(f, [s](double x1, double x2, double x3) {
    const double r2 = x1 * x1 + x2 * x2 + x3 * x3;
    return r2 == 0.0 ? 0.0 : std::pow(r2, 0.5 * s);
  });
}

inline RealField directional_fractional(const RealField& f, int axis, double s) {
  if (s < 0.0)
    throw std::invalid_argument("directional_fractional: s must be >= 0");
  if (axis < 0 || axis >= f.grid.n)
    throw std::invalid_argument("directional_fractional: axis out of range");
  if (s == 0.0) return f;
  return apply_real_multiplier(f, [s, axis](double x1, double x2, double x3) {
    const double x = axis == 0 ? x1 : (axis == 1 ? x2 : x3);
    return x == 0.0 ? 0.0 : std::pow(std::abs(x), s);
  });
}

// Mixed partial derivative with multi-index alpha (per-axis orders).
inline RealField derivative(const RealField& f, const std::array<int, 3>& alpha) {
  const GridSpec& g = f.grid;
  for (int a = 0; a < 3; ++a)
    if (alpha[a] < 0 || (a >= g.n && alpha[a] != 0))
      throw std::invalid_argument("derivative: bad multi-index");
  SpectralField F = forward(f);
  const int total = alpha[0] + alpha[1] + alpha[2];
  // i^total rotates the result; for real output combine magnitude and parity.
  const std::complex<double> unit = std::pow(std::complex<double>(0.0, 1.0), total);
  const int n2 = g.n >= 2 ? g.sizes[1] : 1;
  const int n3 = g.n >= 3 ? g.sizes[2] : 1;
  std::int64_t idx = 0;
  for (int i3 = 0; i3 < n3; ++i3) {
    for (int i2 = 0; i2 < n2; ++i2) {
      for (int i1 = 0; i1 < g.sizes[0]; ++i1, ++idx) {
        const int ii[3] = {i1, i2, i3};
        double mag = 1.0;
        bool kill = false;
        for (int a = 0; a < g.n; ++a) {
          if (alpha[a] == 0) continue;
          // Odd orders cannot represent the Nyquist mode of a real signal.
          if ((alpha[a] & 1) && ii[a] == g.sizes[a] / 2) kill = true;
          mag *= std::pow(g.xi(a, ii[a]), alpha[a]);
        }
        auto& c = F.coeffs[static_cast<std::size_t>(idx)];
        c = kill ? std::complex<double>(0.0, 0.0) : c * unit * mag;
      }
    }
  }
  return detail::inverse_real_part(F);
}

inline std::vector<RealField> gradient(const RealField& f) {
  std::vector<RealField> out;
  out.reserve(static_cast<std::size_t>(f.grid.n));
  for (int a = 0; a < f.grid.n; ++a) {
    std::array<int, 3> alpha{{0, 0, 0}};
    alpha[static_cast<std::size_t>(a)] = 1;
    out.push_back(derivative(f, alpha));
  }
  return out;
}

}  // namespace aniso
