// Dyadic Littlewood-Paley machinery on the resolvable frequency lattice.
//
// The radial low-pass profile zeta is a C^inf smoothstep equal to 1 on
// [0, 3/4] and 0 on [4/3, inf); the shell profile is the telescoping
// difference phi(t) = zeta(t/2) - zeta(t), supported in [3/4, 8/3]. Summed
// over a truncated dyadic range the shells reproduce unity exactly on every
// resolvable nonzero frequency, and the zero mode is carried separately
// (homogeneous decompositions act modulo constants).
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "aniso/fft.hpp"
#include "aniso/field_io.hpp"

namespace aniso {

struct DyadicPartition {
  double lower = 0.75;      // zeta == 1 below this
  double upper = 4.0 / 3.0; // zeta == 0 above this

  // C^inf transition built from psi(u) = exp(-1/u).
  double zeta(double t) const {
    if (t <= lower) return 1.0;
    if (t >= upper) return 0.0;
    const auto psi = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
    const double a = psi(upper - t);
    const double b = psi(t - lower);
    return a / (a + b);
  }

  // Shell profile phi(|xi|) for block j at radius t = 2^-j |xi|.
  double phi(double t) const { return zeta(0.5 * t) - zeta(t); }

  double rho(double t) const { return zeta(t); }

  // FNV-1a over sampled zeta values; identifies the profile in manifests.
  std::uint64_t profile_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i <= 1024; ++i) {
      const double v = zeta(3.0 * i / 1024.0);
      std::uint64_t bits;
      std::memcpy(&bits, &v, sizeof bits);
      for (int b = 0; b < 8; ++b) {
        h ^= (bits >> (8 * b)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return h;
  }
};

struct BlockRange {
  int j_min = 0;
  int j_max = 0;
};

// Smallest dyadic range whose shells sum to 1 on every resolvable nonzero
// frequency: 2^-j_min * |xi|_min >= 4/3 and 2^-(j_max+1) * |xi|_max <= 3/4.
inline BlockRange block_range(const GridSpec& g, const DyadicPartition& part = {}) {
  BlockRange r;
  const double ximin = g.min_freq();
  const double ximax = g.max_freq_radius();
  r.j_min = static_cast<int>(std::floor(std::log2(ximin / part.upper)));
  while (std::ldexp(ximin, -r.j_min) < part.upper) --r.j_min;
  r.j_max = static_cast<int>(std::ceil(std::log2(ximax / part.lower))) - 1;
  while (std::ldexp(ximax, -(r.j_max + 1)) > part.lower) ++r.j_max;
  return r;
}

inline RealField dyadic_block(const RealField& f, int j,
                              const DyadicPartition& part = {}) {
  const BlockRange r = block_range(f.grid, part);
  if (j < r.j_min || j > r.j_max)
    throw std::invalid_argument("dyadic_block: j outside resolvable range [" +
                                std::to_string(r.j_min) + ", " +
                                std::to_string(r.j_max) + "]");
  const double scale = std::ldexp(1.0, -j);
  return apply_real_multiplier(f, [&part, scale](double x1, double x2, double x3) {
    return part.phi(scale * std::sqrt(x1 * x1 + x2 * x2 + x3 * x3));
  });
}

// Low-pass S_j = zeta(2^-j |xi|); the mean passes through (rho(0) = 1),
// matching the nonhomogeneous cutoff used in the energy-balance analysis.
// Once the plateau covers the whole resolvable spectrum the operator is the
// identity and the input is returned bit-exactly.
inline RealField lowpass(const RealField& f, int j, const DyadicPartition& part = {}) {
  const double scale = std::ldexp(1.0, -j);
  if (part.rho(scale * f.grid.max_freq_radius()) == 1.0) return f;
  return apply_real_multiplier(f, [&part, scale](double x1, double x2, double x3) {
    return part.rho(scale * std::sqrt(x1 * x1 + x2 * x2 + x3 * x3));
  });
}

// Smallest j with S_j = identity on the grid's spectrum.
inline int lowpass_identity_level(const GridSpec& g, const DyadicPartition& part = {}) {
  int j = 0;
  while (part.rho(std::ldexp(g.max_freq_radius(), -j)) < 1.0) ++j;
  return j;
}

struct DyadicDecomposition {
  int j_min = 0;
  int j_max = 0;
  std::map<int, RealField> blocks;
  RealField lowpass_remainder;  // zero mode (grid mean)
};

inline DyadicDecomposition decompose(const RealField& f,
                                     const DyadicPartition& part = {}) {
  const BlockRange r = block_range(f.grid, part);
  DyadicDecomposition d;
  d.j_min = r.j_min;
  d.j_max = r.j_max;
  for (int j = r.j_min; j <= r.j_max; ++j) d.blocks.emplace(j, dyadic_block(f, j, part));
  double mean = 0.0;
  for (double v : f.values) mean += v;
  mean /= static_cast<double>(f.grid.point_count());
  d.lowpass_remainder = RealField(f.grid);
  for (auto& v : d.lowpass_remainder.values) v = mean;
  return d;
}

inline RealField reconstruct(const DyadicDecomposition& d) {
  RealField out = d.lowpass_remainder;
  for (const auto& [j, b] : d.blocks) {
    (void)j;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  }
  return out;
}

// Serialized layout: <dir>/manifest.json plus one field container per block.
inline void write_decomposition(const DyadicDecomposition& d,
                                const std::filesystem::path& dir,
                                const DyadicPartition& part = {}) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json manifest;
  manifest["j_min"] = d.j_min;
  manifest["j_max"] = d.j_max;
  manifest["profile_hash"] = part.profile_hash();
  std::vector<std::string> files;
  for (const auto& [j, b] : d.blocks) {
    const std::string name = "block_" + std::to_string(j) + ".anf";
    write_field(b, (dir / name).string());
    files.push_back(name);
  }
  write_field(d.lowpass_remainder, (dir / "remainder.anf").string());
  manifest["blocks"] = files;
  std::ofstream os(dir / "manifest.json");
  os << manifest.dump(2) << '\n';
}

inline DyadicDecomposition read_decomposition(const std::filesystem::path& dir) {
  std::ifstream is(dir / "manifest.json");
  if (!is) throw std::runtime_error("read_decomposition: missing manifest in " + dir.string());
  nlohmann::json manifest = nlohmann::json::parse(is);
  DyadicDecomposition d;
  d.j_min = manifest.at("j_min").get<int>();
  d.j_max = manifest.at("j_max").get<int>();
  for (int j = d.j_min; j <= d.j_max; ++j)
    d.blocks.emplace(j, read_field((dir / ("block_" + std::to_string(j) + ".anf")).string()));
  d.lowpass_remainder = read_field((dir / "remainder.anf").string());
  return d;
}

}  // namespace aniso
