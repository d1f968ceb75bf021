// Deterministic test-function generators: anisotropic Gaussians, compactly
// supported bump products, single modes, and random band-limited fields with
// certified spectral support. Random draws go through an internal Box-Muller
// over mt19937_64 so outputs are bit-stable across platforms and reruns.
//
// Band-limited generators populate integer lattice modes in a fixed
// (lexicographic) order, so the same spec instantiated on a finer grid of the
// same period yields the identical continuum function.
#pragma once

#include <random>

#include "aniso/dyadic.hpp"
#include "aniso/fft.hpp"

namespace aniso {

namespace detail {

class NormalDraw {
 public:
  explicit NormalDraw(std::uint64_t seed) : rng_(seed) {}

  double uniform() {
    // 53-bit mantissa in (0, 1].
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline double min_image(double x, double L) { return x - L * std::round(x / L); }

}  // namespace detail

// Product of per-axis Gaussians exp(-x^2 / (2 w^2)) centered at mid-domain;
// neighbor images are summed so the sample is the genuinely periodic object.
inline RealField gaussian_field(const GridSpec& g, std::array<double, 3> widths) {
  return sample_field(g, [&](double x1, double x2, double x3) {
    const double xs[3] = {x1, x2, x3};
    double v = 1.0;
    for (int a = 0; a < g.n; ++a) {
      const double L = g.lengths[a];
      const double d = xs[a] - 0.5 * L;
      double axis = 0.0;
      for (int k = -1; k <= 1; ++k) {
        const double u = (d + k * L) / widths[static_cast<std::size_t>(a)];
        axis += std::exp(-0.5 * u * u);
      }
      v *= axis;
    }
    return v;
  });
}

// Product of C^inf bumps exp(-1/(1-t^2)), |t| < 1, with per-axis half-widths.
inline RealField bump_product_field(const GridSpec& g, std::array<double, 3> widths) {
  const auto bump = [](double t) {
    const double t2 = t * t;
    return t2 < 1.0 ? std::exp(-1.0 / (1.0 - t2)) : 0.0;
  };
  return sample_field(g, [&](double x1, double x2, double x3) {
    const double xs[3] = {x1, x2, x3};
    double v = 1.0;
    for (int a = 0; a < g.n; ++a) {
      const double d = detail::min_image(xs[a] - 0.5 * g.lengths[a], g.lengths[a]);
      v *= bump(d / widths[static_cast<std::size_t>(a)]);
    }
    return v;
  });
}

inline RealField single_mode_field(const GridSpec& g, std::array<int, 3> mode,
                                   double phase = 0.0) {
  for (int a = 0; a < g.n; ++a)
    if (std::abs(mode[static_cast<std::size_t>(a)]) >= g.sizes[a] / 2)
      throw std::invalid_argument("single_mode_field: mode beyond the Nyquist ring");
  return sample_field(g, [&](double x1, double x2, double x3) {
    double arg = phase;
    const double xs[3] = {x1, x2, x3};
    for (int a = 0; a < g.n; ++a)
      arg += mode[static_cast<std::size_t>(a)] * g.freq_step(a) * xs[a];
    return std::cos(arg);
  });
}

namespace detail {

// Populate Hermitian-symmetric random coefficients weighted by a radial
// envelope; modes are visited in lexicographic order over the bounding box
// so the draw is independent of the grid size.
template <typename Envelope>
inline RealField random_spectral_field(const GridSpec& g, std::uint64_t seed,
                                       double outer_radius, Envelope&& env) {
  SpectralField F(g);
  NormalDraw draw(seed);
  int box[3] = {0, 0, 0};
  for (int a = 0; a < g.n; ++a) {
    box[a] = static_cast<int>(std::floor(outer_radius / g.freq_step(a)));
    box[a] = std::min(box[a], g.sizes[a] / 2 - 1);  // keep off the Nyquist ring
  }
  const auto wrap = [&](int a, int m) { return m >= 0 ? m : m + g.sizes[a]; };
  for (int m3 = (g.n >= 3 ? -box[2] : 0); m3 <= (g.n >= 3 ? box[2] : 0); ++m3) {
    for (int m2 = (g.n >= 2 ? -box[1] : 0); m2 <= (g.n >= 2 ? box[1] : 0); ++m2) {
      for (int m1 = -box[0]; m1 <= box[0]; ++m1) {
        // Visit each conjugate pair once, at its lexicographically positive rep.
        const bool positive = m3 > 0 || (m3 == 0 && (m2 > 0 || (m2 == 0 && m1 > 0)));
        const bool origin = m1 == 0 && m2 == 0 && m3 == 0;
        if (!positive && !origin) continue;
        double xi2 = std::pow(m1 * g.freq_step(0), 2);
        if (g.n >= 2) xi2 += std::pow(m2 * g.freq_step(1), 2);
        if (g.n >= 3) xi2 += std::pow(m3 * g.freq_step(2), 2);
        const double w = env(std::sqrt(xi2));
        if (w == 0.0) continue;
        if (origin) {
          F.coeffs[0] = w * draw();
          continue;
        }
        const std::complex<double> c(w * draw(), w * draw());
        const std::int64_t ip = g.flat_index(wrap(0, m1), g.n >= 2 ? wrap(1, m2) : 0,
                                             g.n >= 3 ? wrap(2, m3) : 0);
        const std::int64_t im = g.flat_index(wrap(0, -m1), g.n >= 2 ? wrap(1, -m2) : 0,
                                             g.n >= 3 ? wrap(2, -m3) : 0);
        F.coeffs[static_cast<std::size_t>(ip)] = c;
        F.coeffs[static_cast<std::size_t>(im)] = std::conj(c);
      }
    }
  }
  return inverse(F);
}

}  // namespace detail

// Random field with spectrum certified inside the ball {|xi| <= radius}.
inline RealField random_ball_field(const GridSpec& g, double radius,
                                   std::uint64_t seed,
                                   const DyadicPartition& part = {}) {
  if (!(radius > 0.0))
    throw std::invalid_argument("random_ball_field: radius must be positive");
  const double cut = part.upper / radius;  // zeta(cut*|xi|) vanishes at |xi| >= radius
  return detail::random_spectral_field(
      g, seed, radius, [&](double r) { return part.zeta(cut * r); });
}

// Random field with spectrum certified inside the shell 2^j * [3/4, 8/3].
inline RealField random_shell_field(const GridSpec& g, int j, std::uint64_t seed,
                                    const DyadicPartition& part = {}) {
  const double scale = std::ldexp(1.0, -j);
  return detail::random_spectral_field(
      g, seed, std::ldexp(8.0 / 3.0, j),
      [&](double r) { return part.phi(scale * r); });
}

// Deterministic smooth low-pass kernel concentrated at scale 1/radius; the
// near-extremal profile for L^1 -> L^q frequency-ball estimates.
inline RealField lowpass_kernel_field(const GridSpec& g, double radius,
                                      const DyadicPartition& part = {}) {
  if (!(radius > 0.0))
    throw std::invalid_argument("lowpass_kernel_field: radius must be positive");
  SpectralField F(g);
  const double cut = part.upper / radius;
  for_each_index(g, [&](std::int64_t idx, int i1, int i2, int i3) {
    double xi2 = std::pow(g.xi(0, i1), 2);
    if (g.n >= 2) xi2 += std::pow(g.xi(1, i2), 2);
    if (g.n >= 3) xi2 += std::pow(g.xi(2, i3), 2);
    F.coeffs[static_cast<std::size_t>(idx)] = part.zeta(cut * std::sqrt(xi2));
  });
  return inverse(F);
}

// A reproducible family of test functions for boundedness experiments.
struct FunctionFamily {
  enum class Kind {
    anisotropic_gaussian,
    random_bandlimited,  // shell-supported
    bump_product,
    single_mode,
    random_ball,
  };
  Kind kind = Kind::random_bandlimited;
  std::uint64_t seed = 1;
  int shell_j = 2;            // random_bandlimited
  double ball_radius = 8.0;   // random_ball
  std::array<double, 3> widths{{1.0, 1.0, 1.0}};

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::anisotropic_gaussian: return "anisotropic_gaussian";
      case Kind::random_bandlimited: return "random_bandlimited";
      case Kind::bump_product: return "bump_product";
      case Kind::single_mode: return "single_mode";
      case Kind::random_ball: return "random_ball";
    }
    return "?";
  }
};

// index-th member of the family on the given grid; deterministic in
// (family.seed, index).
inline RealField family_member(const FunctionFamily& fam, const GridSpec& g,
                               int index) {
  std::mt19937_64 mix(fam.seed + 0x9e3779b97f4a7c15ull * (index + 1));
  switch (fam.kind) {
    case FunctionFamily::Kind::anisotropic_gaussian: {
      std::array<double, 3> w = fam.widths;
      const double stretch = 0.5 + 1.5 * ((mix() >> 11) * 0x1.0p-53);
      const double skew = 0.5 + 1.5 * ((mix() >> 11) * 0x1.0p-53);
      w[0] *= stretch;
      if (g.n >= 2) w[1] *= skew;
      return gaussian_field(g, w);
    }
    case FunctionFamily::Kind::random_bandlimited:
      return random_shell_field(g, fam.shell_j, mix());
    case FunctionFamily::Kind::bump_product: {
      std::array<double, 3> w = fam.widths;
      const double stretch = 0.5 + ((mix() >> 11) * 0x1.0p-53);
      for (int a = 0; a < g.n; ++a) w[static_cast<std::size_t>(a)] *= stretch;
      return bump_product_field(g, w);
    }
    case FunctionFamily::Kind::single_mode: {
      // Mode cap fixed at 8 (grid-independent) so doubled-resolution members
      // are the same continuum waves.
      std::array<int, 3> mode{{0, 0, 0}};
      mode[0] = 1 + static_cast<int>(mix() % 8u);
      if (g.n >= 2) mode[1] = static_cast<int>(mix() % 8u);
      return single_mode_field(g, mode);
    }
    case FunctionFamily::Kind::random_ball:
      return random_ball_field(g, fam.ball_radius, mix());
  }
  throw std::logic_error("family_member: unreachable");
}

}  // namespace aniso
