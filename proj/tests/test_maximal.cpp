#include <catch2/catch_amalgamated.hpp>

#include "aniso/families.hpp"
#include "aniso/maximal.hpp"

using namespace aniso;

TEST_CASE("radius sets") {
  const GridSpec g = make_grid(2, 64);
  const RadiusSet rs = RadiusSet::dyadic(g);
  REQUIRE_FALSE(rs.radii.empty());
  rs.validate(g);
  CHECK(rs.radii.front() == Catch::Approx(g.spacing(0)));
  CHECK(rs.radii.back() <= kTwoPi / 4 + 1e-12);

  CHECK_THROWS_AS(RadiusSet{}.validate(g), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSet{{-1.0}}).validate(g), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSet{{1.0, 1.0}}).validate(g), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSet{{0.5, 4.0}}).validate(g), std::invalid_argument);
}

TEST_CASE("maximal of a constant is the constant") {
  const GridSpec g = make_grid(2, 32);
  const RealField c = sample_field(g, [](double, double, double) { return -2.5; });
  const RealField m = hl_maximal(c, RadiusSet::dyadic(g));
  for (double v : m.values) CHECK(v == Catch::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("maximal dominates the smallest-ball average and matches the oracle") {
  const GridSpec g = make_grid(2, 64);
  const RealField bump = gaussian_field(g, {0.7, 0.9, 1.0});
  const RadiusSet rs = RadiusSet::dyadic(g);
  const RealField m = hl_maximal(bump, rs);

  // Pointwise: max over radii >= the smallest-radius member.
  for (int i1 = 0; i1 < g.sizes[0]; i1 += 7)
    for (int i2 = 0; i2 < g.sizes[1]; i2 += 7)
      CHECK(m.at(i1, i2) + 1e-12 >=
            ball_average_oracle(bump, i1, i2, 0, rs.radii.front()));

  // At the bump's peak the averages decrease in radius, so the sup is the
  // smallest-ball average; cross-check against direct summation.
  const int c1 = g.sizes[0] / 2, c2 = g.sizes[1] / 2;
  CHECK(m.at(c1, c2) ==
        Catch::Approx(ball_average_oracle(bump, c1, c2, 0, rs.radii.front()))
            .epsilon(1e-12));
}

TEST_CASE("maximal operator properties", "[property]") {
  const GridSpec g = make_grid(2, 32);
  const RadiusSet rs = RadiusSet::dyadic(g);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const RealField f = random_ball_field(g, 10.0, seed);
    const RealField h = random_ball_field(g, 10.0, seed + 17);

    SECTION("sublinear, seed " + std::to_string(seed)) {
      const RealField mfg = hl_maximal(f + h, rs);
      const RealField bound = hl_maximal(f, rs) + hl_maximal(h, rs);
      for (std::size_t i = 0; i < mfg.values.size(); ++i)
        CHECK(mfg.values[i] <= bound.values[i] + 1e-10);
    }

    SECTION("M|f| = Mf and monotonicity, seed " + std::to_string(seed)) {
      CHECK(max_abs_diff(hl_maximal(abs(f), rs), hl_maximal(f, rs)) < 1e-11);
      RealField bigger(g);
      for (std::size_t i = 0; i < bigger.values.size(); ++i)
        bigger.values[i] = std::abs(f.values[i]) + std::abs(h.values[i]);
      const RealField mf = hl_maximal(f, rs);
      const RealField mb = hl_maximal(bigger, rs);
      for (std::size_t i = 0; i < mf.values.size(); ++i)
        CHECK(mf.values[i] <= mb.values[i] + 1e-10);
    }

    SECTION("monotone in the radius set, seed " + std::to_string(seed)) {
      RadiusSet fewer;
      fewer.radii.assign(rs.radii.begin(), rs.radii.begin() + 2);
      const RealField small = hl_maximal(f, fewer);
      const RealField full = hl_maximal(f, rs);
      for (std::size_t i = 0; i < small.values.size(); ++i)
        CHECK(small.values[i] <= full.values[i] + 1e-12);
    }
  }
}

TEST_CASE("pointwise interpolation estimate") {
  const GridSpec g = make_grid(2, 64);
  const RadiusSet rs = RadiusSet::dyadic(g);

  SECTION("single mode: finite empirical constant") {
    const RealField u = single_mode_field(g, {3, 2, 0});
    const auto rep = pointwise_interpolation_check(u, 1.0, 0.5, rs);
    CHECK(rep.p99_ratio > 0.0);
    CHECK(std::isfinite(rep.max_ratio));
    CHECK(rep.masked_fraction < 0.05);
  }

  SECTION("zero field: all masked, constant 0 by convention") {
    const auto rep = pointwise_interpolation_check(RealField(g), 1.0, 0.5, rs);
    CHECK(rep.masked_fraction == 1.0);
    CHECK(rep.p99_ratio == 0.0);
  }

  SECTION("stability under resolution doubling") {
    // Same continuum field and the same physical radii on both grids; the
    // smallest ball spans several cells so its quantization error stays small.
    RadiusSet phys;
    for (double r = kTwoPi / 16; r <= kTwoPi / 4; r *= 2.0) phys.radii.push_back(r);
    const GridSpec g2 = make_grid(2, 128);
    for (std::uint64_t seed = 2; seed <= 4; ++seed) {
      const auto coarse = pointwise_interpolation_check(
          random_shell_field(g, 3, seed), 1.0, 0.5, phys);
      const auto fine = pointwise_interpolation_check(
          random_shell_field(g2, 3, seed), 1.0, 0.5, phys);
      CHECK(fine.p99_ratio == Catch::Approx(coarse.p99_ratio).epsilon(0.10));
    }
  }

  SECTION("preconditions") {
    const RealField u = single_mode_field(g, {1, 0, 0});
    CHECK_THROWS_AS(pointwise_interpolation_check(u, 0.0, 0.5, rs),
                    std::invalid_argument);
    CHECK_THROWS_AS(pointwise_interpolation_check(u, 1.0, 0.0, rs),
                    std::invalid_argument);
  }
}

TEST_CASE("maximal boundedness in mixed norms") {
  const GridSpec g = make_grid(2, 64);
  const RadiusSet rs = RadiusSet::dyadic(g);

  SECTION("constants have ratio 1") {
    const RealField c = sample_field(g, [](double, double, double) { return 1.0; });
    const auto rep = maximal_boundedness_check({c}, ExponentVec::parse("2,2"), rs);
    REQUIRE(rep.ratios.size() == 1);
    CHECK(rep.ratios[0] == Catch::Approx(1.0).epsilon(1e-10));
  }

  SECTION("gaussian family: finite stable ratio") {
    std::vector<RealField> family;
    for (double w : {0.5, 0.8, 1.2}) family.push_back(gaussian_field(g, {w, w, 1.0}));
    const auto rep = maximal_boundedness_check(family, ExponentVec::parse("2,2"), rs);
    CHECK(rep.max_ratio >= 1.0 - 1e-10);
    CHECK(rep.max_ratio < 10.0);
  }

  SECTION("endpoint exponents are rejected") {
    const std::vector<RealField> family = {gaussian_field(g, {1.0, 1.0, 1.0})};
    CHECK_THROWS_AS(maximal_boundedness_check(family, ExponentVec::parse("1,2"), rs),
                    std::invalid_argument);
    CHECK_THROWS_AS(maximal_boundedness_check(family, ExponentVec::parse("2,inf"), rs),
                    std::invalid_argument);
  }
}
