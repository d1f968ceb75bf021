// Flat binary field container and CSV export.
//
// Container layout (all little-endian):
//   bytes 0..3   magic "ANF1"
//   u32          n (dimension count)
//   u32 * n      sizes per axis
//   f64 * n      lengths per axis
//   f64 * prod   values, row-major with axis 1 fastest
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "aniso/field.hpp"

namespace aniso {

static_assert(std::endian::native == std::endian::little,
              "field container I/O assumes a little-endian host");

inline void write_field(const RealField& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  os.write("ANF1", 4);
  const std::uint32_t n = static_cast<std::uint32_t>(f.grid.n);
  os.write(reinterpret_cast<const char*>(&n), sizeof n);
  for (int a = 0; a < f.grid.n; ++a) {
    const std::uint32_t s = static_cast<std::uint32_t>(f.grid.sizes[a]);
    os.write(reinterpret_cast<const char*>(&s), sizeof s);
  }
  for (int a = 0; a < f.grid.n; ++a) {
    const double ell = f.grid.lengths[a];
    os.write(reinterpret_cast<const char*>(&ell), sizeof ell);
  }
  os.write(reinterpret_cast<const char*>(f.values.data()),
           static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

inline RealField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "ANF1", 4) != 0)
    throw std::runtime_error("read_field: bad magic in " + path);
  std::uint32_t n = 0;
  is.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!is || n < 1 || n > 3)
    throw std::runtime_error("read_field: bad dimension in " + path);
  std::array<int, 3> sizes{{1, 1, 1}};
  std::array<double, 3> lengths{{1.0, 1.0, 1.0}};
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t s = 0;
    is.read(reinterpret_cast<char*>(&s), sizeof s);
    sizes[a] = static_cast<int>(s);
  }
  for (std::uint32_t a = 0; a < n; ++a)
    is.read(reinterpret_cast<char*>(&lengths[a]), sizeof(double));
  GridSpec grid(static_cast<int>(n), sizes, lengths);
  RealField f(grid);
  is.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!is) throw std::runtime_error("read_field: truncated payload in " + path);
  return f;
}

// CSV export for small grids: one row per point, coordinates then value.
inline std::string field_to_csv(const RealField& f) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (int a = 0; a < f.grid.n; ++a) os << 'x' << (a + 1) << ',';
  os << "value\n";
  const double h1 = f.grid.spacing(0);
  const double h2 = f.grid.n >= 2 ? f.grid.spacing(1) : 0.0;
  const double h3 = f.grid.n >= 3 ? f.grid.spacing(2) : 0.0;
  for_each_index(f.grid, [&](std::int64_t idx, int i1, int i2, int i3) {
    os << i1 * h1;
    if (f.grid.n >= 2) os << ',' << i2 * h2;
    if (f.grid.n >= 3) os << ',' << i3 * h3;
    os << ',' << f.values[static_cast<std::size_t>(idx)] << '\n';
  });
  return os.str();
}

}  // namespace aniso
