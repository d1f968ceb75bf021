// Uniform periodic grids on the n-torus (n = 1..3).
// Layout is fixed globally: row-major with axis 1 fastest, i.e.
// flat index = x1 + N1*(x2 + N2*x3). Frequencies are angular, integer
// multiples of 2*pi/L per axis, with the FFT's natural index order
// (index m maps to signed mode m for m < N/2 and m - N otherwise).
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace aniso {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct GridSpec {
  int n = 0;
  std::array<int, 3> sizes{{1, 1, 1}};
  std::array<double, 3> lengths{{kTwoPi, kTwoPi, kTwoPi}};

  GridSpec() = default;
  GridSpec(int dim, std::array<int, 3> sz, std::array<double, 3> len)
      : n(dim), sizes(sz), lengths(len) {
    validate();
  }

  void validate() const {
    if (n < 1 || n > 3) throw std::invalid_argument("GridSpec: n must be 1..3");
    for (int a = 0; a < n; ++a) {
      const int s = sizes[a];
      if (s < 8 || (s & (s - 1)) != 0)
        throw std::invalid_argument(
            "GridSpec: sizes must be powers of two >= 8");
      if (!(lengths[a] > 0.0))
        throw std::invalid_argument("GridSpec: lengths must be positive");
    }
  }

  std::int64_t point_count() const {
    std::int64_t c = 1;
    for (int a = 0; a < n; ++a) c *= sizes[a];
    return c;
  }

  double spacing(int axis) const { return lengths[axis] / sizes[axis]; }

  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < n; ++a) v *= spacing(a);
    return v;
  }

  double volume() const {
    double v = 1.0;
    for (int a = 0; a < n; ++a) v *= lengths[a];
    return v;
  }

  // Signed integer mode for FFT storage index along an axis.
  int signed_mode(int axis, int index) const {
    const int N = sizes[axis];
    return index < N / 2 ? index : index - N;
  }

  double freq_step(int axis) const { return kTwoPi / lengths[axis]; }

  // Angular frequency of storage index along an axis.
  double xi(int axis, int index) const {
    return freq_step(axis) * signed_mode(axis, index);
  }

  // Largest resolvable |xi| (Euclidean norm of the Nyquist corner).
  double max_freq_radius() const {
    double r2 = 0.0;
    for (int a = 0; a < n; ++a) {
      const double m = freq_step(a) * (sizes[a] / 2);
      r2 += m * m;
    }
    return std::sqrt(r2);
  }

  // Smallest nonzero |xi| on the lattice.
  double min_freq() const {
    double m = freq_step(0);
    for (int a = 1; a < n; ++a) m = std::min(m, freq_step(a));
    return m;
  }

  std::int64_t flat_index(int i1, int i2 = 0, int i3 = 0) const {
    return i1 + static_cast<std::int64_t>(sizes[0]) *
                    (i2 + static_cast<std::int64_t>(sizes[1]) * i3);
  }

  // Same grid with each period multiplied by lambda[a]; values carried over
  // realize the dilation u_lambda(x) = u(x / lambda) without resampling.
  GridSpec with_lengths_scaled(const std::array<double, 3>& lambda) const {
    GridSpec g = *this;
    for (int a = 0; a < n; ++a) {
      if (!(lambda[a] > 0.0))
        throw std::invalid_argument("GridSpec: dilation factors must be positive");
      g.lengths[a] = lengths[a] * lambda[a];
    }
    return g;
  }

  bool same_shape(const GridSpec& other) const {
    if (n != other.n) return false;
    for (int a = 0; a < n; ++a)
      if (sizes[a] != other.sizes[a]) return false;
    return true;
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.sizes[i] != b.sizes[i] || a.lengths[i] != b.lengths[i]) return false;
    return true;
  }
};

// Isotropic grid: same size and period on every axis.
inline GridSpec make_grid(int n, int size, double length = kTwoPi) {
  std::array<int, 3> sizes{{1, 1, 1}};
  std::array<double, 3> lengths{{1.0, 1.0, 1.0}};
  for (int a = 0; a < (n >= 1 && n <= 3 ? n : 0); ++a) {
    sizes[a] = size;
    lengths[a] = length;
  }
  return GridSpec(n, sizes, lengths);
}

}  // namespace aniso
