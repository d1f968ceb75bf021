#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

#include "aniso/besov.hpp"
#include "aniso/dyadic.hpp"
#include "aniso/families.hpp"
#include "aniso/fractional.hpp"

using namespace aniso;

TEST_CASE("dyadic partition of unity on the resolvable lattice") {
  const GridSpec g = make_grid(2, 128);
  const DyadicPartition part;
  const BlockRange range = block_range(g, part);

  double worst_full = 0.0, worst_shell = 0.0;
  for_each_index(g, [&](std::int64_t, int i1, int i2, int) {
    const double xi = std::hypot(g.xi(0, i1), g.xi(1, i2));
    // rho + sum_{j >= 0} phi(2^-j xi) -> 1 for every xi.
    double full = part.rho(xi);
    for (int j = 0; j <= range.j_max; ++j) full += part.phi(std::ldexp(xi, -j));
    worst_full = std::max(worst_full, std::abs(full - 1.0));
    if (xi > 0.0) {
      double shells = 0.0;
      for (int j = range.j_min; j <= range.j_max; ++j)
        shells += part.phi(std::ldexp(xi, -j));
      worst_shell = std::max(worst_shell, std::abs(shells - 1.0));
    }
  });
  CHECK(worst_full <= 1e-10);
  CHECK(worst_shell <= 1e-10);
}

TEST_CASE("fractional laplacian on eigenfunctions") {
  const GridSpec g = make_grid(2, 64);
  const RealField sinx = sample_field(g, [](double x, double, double) {
    return std::sin(x);
  });
  CHECK(max_abs_diff(fractional_laplacian(sinx, 2.0), sinx) < 1e-12);

  const RealField mode = sample_field(g, [](double x1, double x2, double) {
    return std::cos(2 * x1 + x2);
  });
  const RealField want = std::sqrt(5.0) * mode;
  CHECK(max_abs_diff(fractional_laplacian(mode, 1.0), want) < 1e-11);

  CHECK_THROWS_AS(fractional_laplacian(sinx, -0.5), std::invalid_argument);
}

TEST_CASE("fractional laplacian of a periodized Gaussian vs dense-sum oracle") {
  // Oracle: closed-form coefficients sqrt(2 pi) e^{-xi^2/2} / L summed
  // directly against cos(xi x); independent of the transform path.
  const double L = 16.0;
  const int N = 256;
  const GridSpec g = make_grid(1, N, L);
  const RealField f = sample_field(g, [&](double x, double, double) {
    const double xm = detail::min_image(x, L);
    return std::exp(-0.5 * xm * xm);
  });
  const double s = 1.0;
  const RealField got = fractional_laplacian(f, s);

  const double amp = std::sqrt(kTwoPi) / L;
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < N; ++i) {
    const double x = i * g.spacing(0);
    double sum = 0.0;
    for (int m = 1; m < N / 2; ++m) {
      const double xi = m * g.freq_step(0);
      sum += 2.0 * std::pow(xi, s) * amp * std::exp(-0.5 * xi * xi) * std::cos(xi * x);
    }
    worst = std::max(worst, std::abs(sum - got.values[static_cast<std::size_t>(i)]));
    scale = std::max(scale, std::abs(sum));
  }
  CHECK(worst <= 1e-8 * scale);
}

TEST_CASE("directional fractional laplacian") {
  const GridSpec g = make_grid(2, 64);
  const RealField siny = sample_field(g, [](double, double y, double) {
    return std::sin(y);
  });
  CHECK(max_abs(directional_fractional(siny, 0, 1.5)) < 1e-12);

  const RealField sinx = sample_field(g, [](double x, double, double) {
    return std::sin(x);
  });
  CHECK(max_abs_diff(directional_fractional(sinx, 0, 1.0), sinx) < 1e-12);

  CHECK_THROWS_AS(directional_fractional(sinx, 2, 1.0), std::invalid_argument);

  // Sum of directional operators is norm-equivalent to the full operator:
  // in L^2 the multiplier ratio (|xi_1|^s + |xi_2|^s)/|xi|^s lies in [1, 2^(1-s/2)]
  // for s = 1, and the empirical mixed-norm ratio stays in a fixed band.
  const RealField u = random_shell_field(g, 3, 77u);
  const RealField sum_dir = directional_fractional(u, 0, 1.0) +
                            directional_fractional(u, 1, 1.0);
  const RealField full = fractional_laplacian(u, 1.0);
  const double l2_ratio = plain_lp_norm(sum_dir, Exponent(2)) /
                          plain_lp_norm(full, Exponent(2));
  CHECK(l2_ratio >= 1.0 - 1e-10);
  CHECK(l2_ratio <= std::sqrt(2.0) + 1e-10);
  const ExponentVec mixed = ExponentVec::parse("3,2");
  const double mixed_ratio = mixed_lebesgue_norm(sum_dir, mixed) /
                             mixed_lebesgue_norm(full, mixed);
  CHECK(mixed_ratio > 0.25);
  CHECK(mixed_ratio < 4.0);
}

TEST_CASE("gradient") {
  const GridSpec g = make_grid(2, 64);
  const RealField sinx = sample_field(g, [](double x, double, double) {
    return std::sin(x);
  });
  const auto grads = gradient(sinx);
  REQUIRE(grads.size() == 2);
  const RealField cosx = sample_field(g, [](double x, double, double) {
    return std::cos(x);
  });
  CHECK(max_abs_diff(grads[0], cosx) < 1e-12);
  CHECK(max_abs(grads[1]) < 1e-13);

  const RealField c = sample_field(g, [](double, double, double) { return 3.0; });
  for (const auto& d : gradient(c)) CHECK(max_abs(d) < 1e-13);

  // Parseval: ||grad f||_2^2 == ||Lambda^1 f||_2^2 for band-limited fields.
  const RealField u = random_shell_field(g, 3, 5u);
  const auto gu = gradient(u);
  double grad_sq = 0.0;
  for (const auto& d : gu) {
    const double n = plain_lp_norm(d, Exponent(2));
    grad_sq += n * n;
  }
  const double lam = plain_lp_norm(fractional_laplacian(u, 1.0), Exponent(2));
  CHECK(grad_sq == Catch::Approx(lam * lam).epsilon(1e-10));
}

TEST_CASE("operator composition: Lambda^s1 Lambda^s2 = Lambda^(s1+s2)") {
  const GridSpec g = make_grid(2, 32);
  const RealField u = random_shell_field(g, 2, 9u);
  const RealField two_step = fractional_laplacian(fractional_laplacian(u, 0.7), 0.8);
  const RealField one_step = fractional_laplacian(u, 1.5);
  CHECK(max_abs_diff(two_step, one_step) <= 1e-10 * std::max(1.0, max_abs(one_step)));
}

TEST_CASE("dyadic blocks: support, reconstruction, oracle") {
  const GridSpec g = make_grid(2, 128);
  const DyadicPartition part;
  const BlockRange range = block_range(g, part);

  SECTION("single mode lands only in adjacent blocks") {
    const int j0 = 3;  // |xi| = 8
    const RealField f = single_mode_field(g, {8, 0, 0});
    int nonzero = 0;
    for (int j = range.j_min; j <= range.j_max; ++j) {
      const double amp = max_abs(dyadic_block(f, j, part));
      if (amp > 1e-12) {
        ++nonzero;
        CHECK(j >= j0 - 1);
        CHECK(j <= j0 + 1);
      }
    }
    CHECK(nonzero >= 1);
  }

  SECTION("reconstruction: blocks + zero mode") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      RealField f = random_ball_field(g, 40.0, seed);
      f.values[0] += 1.0;  // give it a mean and some roughness
      const DyadicDecomposition d = decompose(f, part);
      CHECK(max_abs_diff(reconstruct(d), f) <= 1e-8 * std::max(1.0, max_abs(f)));
    }
  }

  SECTION("block L2 norm vs masked-spectrum oracle") {
    const RealField f = random_ball_field(g, 40.0, 4u);
    const SpectralField F = forward(f);
    for (int j : {1, 3, 5}) {
      double masked = 0.0;
      for_each_index(g, [&](std::int64_t idx, int i1, int i2, int) {
        const double xi = std::hypot(g.xi(0, i1), g.xi(1, i2));
        const double w = part.phi(std::ldexp(xi, -j));
        masked += w * w * std::norm(F.coeffs[static_cast<std::size_t>(idx)]);
      });
      const double oracle = std::sqrt(masked * g.volume());
      const double got = plain_lp_norm(dyadic_block(f, j, part), Exponent(2));
      CHECK(got == Catch::Approx(oracle).epsilon(1e-10).margin(1e-12));
    }
  }

  SECTION("out-of-range j is rejected") {
    const RealField f = single_mode_field(g, {1, 0, 0});
    CHECK_THROWS_AS(dyadic_block(f, range.j_max + 1, part), std::invalid_argument);
    CHECK_THROWS_AS(dyadic_block(f, range.j_min - 1, part), std::invalid_argument);
  }
}

TEST_CASE("lowpass operator") {
  const GridSpec g = make_grid(2, 64);
  const DyadicPartition part;

  // Band fully below (3/4) 2^j passes unchanged (including the mean).
  RealField f = random_ball_field(g, 5.0, 12u);
  for (auto& v : f.values) v += 0.7;
  CHECK(max_abs_diff(lowpass(f, 3, part), f) < 1e-11);

  // A single high mode is annihilated by a low cutoff.
  const RealField high = single_mode_field(g, {20, 9, 0});
  CHECK(max_abs(lowpass(high, 2, part)) < 1e-12);

  // S_j f -> f in mixed norm as j grows.
  const RealField u = gaussian_field(g, {0.6, 0.9, 1.0});
  const ExponentVec q = ExponentVec::parse("2,4");
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= lowpass_identity_level(g, part); ++j) {
    const double err = mixed_lebesgue_norm(lowpass(u, j, part) - u, q);
    CHECK(err <= prev + 1e-14);
    prev = err;
  }
  CHECK(prev < 1e-10);
}

TEST_CASE("besov norms") {
  const GridSpec g = make_grid(2, 128);
  const DyadicPartition part;

  SECTION("field filling exactly one block") {
    // Spectrum in 2^j0 [4/3, 3/2]: phi_j0 == 1 there and neighbors vanish,
    // so the r = inf Besov norm equals 2^(j0 s) times the mixed norm.
    const int j0 = 3;
    const GridSpec& gg = g;
    SpectralField F(gg);
    const double lo = std::ldexp(4.0 / 3.0, j0), hi = std::ldexp(1.5, j0);
    for_each_index(gg, [&](std::int64_t idx, int i1, int i2, int) {
      const double xi = std::hypot(gg.xi(0, i1), gg.xi(1, i2));
      if (xi >= lo && xi <= hi) {
        const int m1 = gg.signed_mode(0, i1), m2 = gg.signed_mode(1, i2);
        const double re = std::cos(0.3 * m1 + 1.1 * m2);
        const double im = (m1 == 0 && m2 == 0) ? 0.0 : std::sin(0.2 * m1 - 0.7 * m2);
        F.coeffs[static_cast<std::size_t>(idx)] = {re, im};
      }
    });
    // Hermitian symmetrization.
    for_each_index(gg, [&](std::int64_t idx, int i1, int i2, int) {
      const int c1 = (gg.sizes[0] - i1) % gg.sizes[0];
      const int c2 = (gg.sizes[1] - i2) % gg.sizes[1];
      const auto cidx = static_cast<std::size_t>(gg.flat_index(c1, c2, 0));
      F.coeffs[cidx] = std::conj(F.coeffs[static_cast<std::size_t>(idx)]);
    });
    const RealField shell = inverse(F);
    const ExponentVec p = ExponentVec::parse("2,3");
    const double s = 0.8;
    const double want = std::pow(2.0, s * j0) * mixed_lebesgue_norm(shell, p);
    CHECK(besov_norm(shell, s, p, Exponent::infinity(), part) ==
          Catch::Approx(want).epsilon(1e-10));
  }

  SECTION("single mode, s = 0, r = inf: within the partition overlap") {
    const RealField f = single_mode_field(g, {8, 0, 0});
    const ExponentVec p = ExponentVec::parse("2,2");
    const double b = besov_norm(f, 0.0, p, Exponent::infinity(), part);
    const double n = mixed_lebesgue_norm(f, p);
    CHECK(b <= n * (1.0 + 1e-10));
    CHECK(b >= 0.5 * n);
  }

  SECTION("sobolev norm basics") {
    const RealField sinx = sample_field(g, [](double x, double, double) {
      return std::sin(x);
    });
    const ExponentVec p2 = ExponentVec::parse("2,2");
    CHECK(sobolev_norm(sinx, 2.0, p2) ==
          Catch::Approx(mixed_lebesgue_norm(sinx, p2)).epsilon(1e-12));
    const RealField u = random_shell_field(g, 3, 31u);
    CHECK(sobolev_norm(u, 0.0, p2) ==
          Catch::Approx(mixed_lebesgue_norm(u, p2)).epsilon(1e-12));
    // Spectral-side oracle for s > 0.
    const SpectralField U = forward(u);
    double acc = 0.0;
    for_each_index(g, [&](std::int64_t idx, int i1, int i2, int) {
      const double xi2 = std::pow(g.xi(0, i1), 2) + std::pow(g.xi(1, i2), 2);
      acc += xi2 * std::norm(U.coeffs[static_cast<std::size_t>(idx)]);
    });
    CHECK(sobolev_norm(u, 1.0, p2) ==
          Catch::Approx(std::sqrt(acc * g.volume())).epsilon(1e-10));
  }

  SECTION("embedding: Besov-infinity below Sobolev with a stable constant") {
    const ExponentVec p = ExponentVec::parse("2,3");
    double max_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const EmbeddingReport rep =
          besov_embedding_check(random_ball_field(g, 30.0, seed), 0.7, p, part);
      CHECK(std::isfinite(rep.ratio));
      max_ratio = std::max(max_ratio, rep.ratio);
    }
    CHECK(max_ratio > 0.0);
    // Same draws on a doubled grid: the constant moves by < 10%.
    const GridSpec g2 = make_grid(2, 256);
    double max_ratio2 = 0.0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const EmbeddingReport rep =
          besov_embedding_check(random_ball_field(g2, 30.0, seed), 0.7, p, part);
      max_ratio2 = std::max(max_ratio2, rep.ratio);
    }
    CHECK(max_ratio2 == Catch::Approx(max_ratio).epsilon(0.10));

    const EmbeddingReport zero = besov_embedding_check(RealField(g), 0.7, p, part);
    CHECK(zero.ratio == 0.0);
  }
}

TEST_CASE("approximate identity sweep") {
  const GridSpec g = make_grid(2, 64);
  const DyadicPartition part;
  const int jtop = lowpass_identity_level(g, part);

  SECTION("band-limited trajectory: exactly zero beyond the cutoff") {
    std::vector<std::pair<double, RealField>> traj;
    const RealField base = random_ball_field(g, 6.0, 3u);
    for (int k = 0; k <= 4; ++k)
      traj.emplace_back(0.25 * k, std::exp(-0.25 * k) * base);
    const SpaceTimeExponents pq(Exponent(2), ExponentVec::parse("2,2"), 1.0);
    const auto rep = approx_identity_sweep(traj, pq, {4, 5, jtop}, part);
    CHECK(rep.points.back().lhs == 0.0);
  }

  SECTION("smooth trajectory: strict decay below 1e-6") {
    // Widths chosen so every intermediate shell carries spectral mass above
    // the FFT roundoff floor; the final cutoff clears the lattice exactly.
    std::vector<std::pair<double, RealField>> traj;
    const RealField base = gaussian_field(g, {0.28, 0.32, 1.0});
    for (int k = 0; k <= 8; ++k)
      traj.emplace_back(0.125 * k, std::exp(-0.125 * k) * base);
    const SpaceTimeExponents pq(Exponent(4), ExponentVec::parse("4,4"), 1.0);
    std::vector<int> js;
    for (int j = 0; j <= jtop; ++j) js.push_back(j);
    const auto rep = approx_identity_sweep(traj, pq, js, part);
    for (std::size_t i = 1; i < rep.points.size(); ++i)
      CHECK(rep.points[i].lhs < rep.points[i - 1].lhs);
    CHECK(rep.points.back().lhs < 1e-6);
  }

  SECTION("empty range is rejected") {
    std::vector<std::pair<double, RealField>> traj;
    traj.emplace_back(0.0, RealField(g));
    traj.emplace_back(1.0, RealField(g));
    const SpaceTimeExponents pq(Exponent(2), ExponentVec::parse("2,2"), 1.0);
    CHECK_THROWS_AS(approx_identity_sweep(traj, pq, {}, part), std::invalid_argument);
  }
}

TEST_CASE("decomposition round trip through the directory store") {
  const GridSpec g = make_grid(2, 32);
  RealField f = random_ball_field(g, 10.0, 21u);
  f.values[0] += 0.3;
  const DyadicDecomposition d = decompose(f);
  const std::filesystem::path dir = "test_decomp_store";
  write_decomposition(d, dir);
  const DyadicDecomposition back = read_decomposition(dir);
  CHECK(back.j_min == d.j_min);
  CHECK(back.j_max == d.j_max);
  CHECK(max_abs_diff(reconstruct(back), f) <= 1e-8);
  std::filesystem::remove_all(dir);
}
