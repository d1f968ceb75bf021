// Forward/inverse discrete Fourier transforms on periodic grids via FFTW.
//
// Conventions (fixed for the whole library):
//   forward:  F(xi) = (1/prod N_a) * sum_x f(x) e^{-i xi . x}
//   inverse:  f(x)  = sum_xi F(xi) e^{+i xi . x}
// so forward coefficients coincide with Fourier-series coefficients and
// multiplier formulas read off the continuum symbols directly.
// Parseval: integral |f|^2 dx = prod(L_a) * sum_xi |F(xi)|^2.
//
// Plan creation is serialized behind a mutex (FFTW's planner is not
// thread-safe); concurrent transforms on distinct fields are safe.
#pragma once

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <vector>

#include "aniso/field.hpp"

namespace aniso {
namespace detail {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline void run_c2c(const GridSpec& g, std::vector<std::complex<double>>& buf,
                    int sign) {
  int dims[3];
  for (int a = 0; a < g.n; ++a) dims[a] = g.sizes[g.n - 1 - a];  // axis 1 fastest
  fftw_complex* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft(g.n, dims, data, data, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace detail

inline SpectralField forward(const RealField& f) {
  f.grid.validate();
  SpectralField F(f.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) F.coeffs[i] = f.values[i];
  detail::run_c2c(f.grid, F.coeffs, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(f.grid.point_count());
  for (auto& c : F.coeffs) c *= scale;
  return F;
}

namespace detail {

// Real part of the backward transform, no symmetry validation. For real-even
// multiplier pipelines the result is Hermitian by construction and the
// imaginary residual is bare roundoff.
inline RealField inverse_real_part(const SpectralField& F) {
  F.grid.validate();
  std::vector<std::complex<double>> buf = F.coeffs;
  run_c2c(F.grid, buf, FFTW_BACKWARD);
  RealField f(F.grid);
  for (std::size_t i = 0; i < buf.size(); ++i) f.values[i] = buf[i].real();
  return f;
}

}  // namespace detail

// Inverse transform; imaginary residual beyond `imag_tol` (relative to the
// coefficient mass) signals a non-Hermitian coefficient set and throws.
inline RealField inverse(const SpectralField& F, double imag_tol = 1e-6) {
  F.grid.validate();
  std::vector<std::complex<double>> buf = F.coeffs;
  double coeff_mass = 0.0;
  for (const auto& c : F.coeffs) coeff_mass += std::abs(c);
  detail::run_c2c(F.grid, buf, FFTW_BACKWARD);
  RealField f(F.grid);
  double max_imag = 0.0;
  for (std::size_t i = 0; i < buf.size(); ++i) {
    f.values[i] = buf[i].real();
    max_imag = std::max(max_imag, std::abs(buf[i].imag()));
  }
  if (max_imag > imag_tol * std::max(coeff_mass, 1e-300))
    throw std::domain_error("inverse: coefficients are not Hermitian-symmetric");
  return f;
}

// Apply a frequency-space multiplier m(xi_1, .., xi_n) in place.
template <typename Fn>
inline void apply_multiplier(SpectralField& F, Fn&& m) {
  const GridSpec& g = F.grid;
  const int n2 = g.n >= 2 ? g.sizes[1] : 1;
  const int n3 = g.n >= 3 ? g.sizes[2] : 1;
  std::int64_t idx = 0;
  for (int i3 = 0; i3 < n3; ++i3) {
    const double x3 = g.n >= 3 ? g.xi(2, i3) : 0.0;
    for (int i2 = 0; i2 < n2; ++i2) {
      const double x2 = g.n >= 2 ? g.xi(1, i2) : 0.0;
      for (int i1 = 0; i1 < g.sizes[0]; ++i1, ++idx) {
        F.coeffs[static_cast<std::size_t>(idx)] *= m(g.xi(0, i1), x2, x3);
      }
    }
  }
}

// Real-multiplier operator acting on a real field; the round trip through
// frequency space is exact on the resolvable lattice.
template <typename Fn>
inline RealField apply_real_multiplier(const RealField& f, Fn&& m) {
  SpectralField F = forward(f);
  apply_multiplier(F, m);
  return detail::inverse_real_part(F);
}

// L2 norm (physical measure) evaluated on the frequency side.
inline double l2_norm_spectral(const SpectralField& F) {
  double s = 0.0;
  for (const auto& c : F.coeffs) s += std::norm(c);
  return std::sqrt(s * F.grid.volume());
}

}  // namespace aniso
