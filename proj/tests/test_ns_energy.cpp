#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

#include "aniso/navier_stokes.hpp"

using namespace aniso;

namespace {

double inner_product(const GridSpec& g, const SpectralField& a, const SpectralField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    s += (std::conj(a.coeffs[i]) * b.coeffs[i]).real();
  return s * g.volume();
}

double l2_error(const VelocityField& a, const VelocityField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.u.values.size(); ++i) {
    const double du = a.u.values[i] - b.u.values[i];
    const double dv = a.v.values[i] - b.v.values[i];
    s += du * du + dv * dv;
  }
  return std::sqrt(s * a.u.grid.cell_volume());
}

}  // namespace

TEST_CASE("taylor-green oracle") {
  const GridSpec g = make_grid(2, 64);
  const double nu = 0.1;
  const NsSolver2D solver(g, nu);

  const VelocityField v0 = taylor_green(g, nu, 0.0);
  CHECK(max_abs(v0.u) == Catch::Approx(1.0).epsilon(1e-12));

  const auto s0 = solver.make_state(v0);
  CHECK(solver.relative_divergence(s0) < 1e-12);

  const double e0 = solver.kinetic_energy(s0);
  for (double t : {0.3, 1.0}) {
    const auto st = solver.make_state(taylor_green(g, nu, t), t);
    CHECK(solver.kinetic_energy(st) / e0 ==
          Catch::Approx(std::exp(-4.0 * nu * t)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(taylor_green(make_grid(1, 64), nu, 0.0), std::invalid_argument);
}

TEST_CASE("leray projection annihilates divergence and is idempotent") {
  const GridSpec g = make_grid(2, 64);
  const NsSolver2D solver(g, 0.1);
  VelocityField raw;
  raw.u = random_ball_field(g, 15.0, 3u);
  raw.v = random_ball_field(g, 15.0, 4u);
  const auto s1 = solver.make_state(raw);
  CHECK(solver.relative_divergence(s1) < 1e-12);

  const auto s2 = solver.make_state(solver.velocity(s1));
  double diff = 0.0;
  for (std::size_t i = 0; i < s1.uh.coeffs.size(); ++i) {
    diff = std::max(diff, std::abs(s1.uh.coeffs[i] - s2.uh.coeffs[i]));
    diff = std::max(diff, std::abs(s1.vh.coeffs[i] - s2.vh.coeffs[i]));
  }
  CHECK(diff < 1e-12);
}

TEST_CASE("dealiased advection conserves energy in the inviscid pairing") {
  const GridSpec g = make_grid(2, 64);
  const NsSolver2D solver(g, 0.1);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto s = solver.make_state(random_divfree_velocity(g, 1, 3, seed));
    SpectralField gu(g), gv(g);
    solver.nonlinear_rhs(s, gu, gv);
    const double transfer = inner_product(g, s.uh, gu) + inner_product(g, s.vh, gv);
    const double scale = std::sqrt(2.0 * solver.kinetic_energy(s)) *
                         std::sqrt(inner_product(g, gu, gu) + inner_product(g, gv, gv));
    CHECK(std::abs(transfer) <= 1e-10 * std::max(scale, 1e-30));
  }
}

TEST_CASE("stokes step is the exact viscous decay") {
  const GridSpec g = make_grid(2, 32);
  const double nu = 0.3;
  const NsSolver2D solver(g, nu);
  const auto s = solver.make_state(random_divfree_velocity(g, 1, 2, 9u));
  const double dt = 0.05;
  const auto stepped = solver.step(s, dt, /*advect=*/false);
  double worst = 0.0;
  for_each_index(g, [&](std::int64_t idx, int i1, int i2, int) {
    const double k2 = std::pow(g.xi(0, i1), 2) + std::pow(g.xi(1, i2), 2);
    const double e = std::exp(-nu * k2 * dt);
    const auto i = static_cast<std::size_t>(idx);
    worst = std::max(worst, std::abs(stepped.uh.coeffs[i] - e * s.uh.coeffs[i]));
    worst = std::max(worst, std::abs(stepped.vh.coeffs[i] - e * s.vh.coeffs[i]));
  });
  CHECK(worst < 1e-13);
}

TEST_CASE("taylor-green run: solution error, budget, flux") {
  const GridSpec g = make_grid(2, 64);
  const double nu = 0.1;
  const NsSolver2D solver(g, nu);
  NsRunConfig cfg;
  cfg.nu = nu;
  cfg.T = 0.25;
  cfg.dt = 1e-3;
  const VelocityTrajectory traj = run_ns(solver, taylor_green(g, nu, 0.0), cfg);

  SECTION("matches the exact solution") {
    CHECK(l2_error(traj.snapshots.back(), taylor_green(g, nu, cfg.T)) < 1e-9);
  }

  SECTION("energy budget residual is tiny") {
    const auto budgets = energy_budget(traj);
    REQUIRE(budgets.size() == traj.times.size());
    double worst = 0.0;
    for (const auto& b : budgets) worst = std::max(worst, std::abs(b.residual));
    CHECK(worst < 1e-6);
  }

  SECTION("flux vanishes identically for the band-limited flow") {
    const auto series = flux_convergence(traj, {1, 2, 3, 4});
    for (double f : series.flux) CHECK(std::abs(f) < 1e-12);
  }

  SECTION("zero flow produces zero budgets") {
    VelocityField zero;
    zero.u = RealField(g);
    zero.v = RealField(g);
    NsRunConfig small = cfg;
    small.T = 0.01;
    const auto ztraj = run_ns(solver, zero, small);
    for (const auto& b : energy_budget(ztraj)) {
      CHECK(b.kinetic == 0.0);
      CHECK(b.residual == 0.0);
    }
  }
}

TEST_CASE("decaying random run: flux convergence and monotone energy") {
  const GridSpec g = make_grid(2, 64);
  const double nu = 0.05;
  const NsSolver2D solver(g, nu);
  NsRunConfig cfg;
  cfg.nu = nu;
  cfg.T = 0.3;
  cfg.dt = 5e-4;
  const VelocityTrajectory traj =
      run_ns(solver, random_divfree_velocity(g, 1, 4, 17u), cfg);

  SECTION("energy decays along the run") {
    for (std::size_t i = 1; i < traj.samples.size(); ++i)
      CHECK(traj.samples[i].kinetic <= traj.samples[i - 1].kinetic * (1.0 + 1e-12));
  }

  SECTION("energy budget residual shrinks quadratically under dt refinement") {
    const auto budgets = energy_budget(traj);
    double worst = 0.0;
    for (const auto& b : budgets) worst = std::max(worst, std::abs(b.residual));
    CHECK(worst < 1e-4);

    NsRunConfig finer = cfg;
    finer.dt = cfg.dt / 2.0;
    const auto traj2 = run_ns(solver, random_divfree_velocity(g, 1, 4, 17u), finer);
    double worst2 = 0.0;
    for (const auto& b : energy_budget(traj2))
      worst2 = std::max(worst2, std::abs(b.residual));
    CHECK(worst2 < worst / 3.0);
  }

  SECTION("flux series decays beyond the integral scale and ends below 1e-8") {
    // The initial spectrum tops out at shell 4; once the cutoff clears the
    // energetic band the commutator flux magnitude falls off monotonically.
    const int top = lowpass_identity_level(g);
    std::vector<int> Ns;
    for (int N = 4; N <= top; ++N) Ns.push_back(N);
    const auto series = flux_convergence(traj, Ns);
    for (std::size_t i = 1; i < series.flux.size(); ++i)
      CHECK(std::abs(series.flux[i]) <= std::abs(series.flux[i - 1]) * (1.0 + 1e-9) + 1e-14);
    CHECK(std::abs(series.flux.back()) < 1e-8);

    CHECK_THROWS_AS(flux_convergence(traj, {}), std::invalid_argument);
    CHECK_THROWS_AS(flux_convergence(traj, {top + 1}), std::invalid_argument);
  }

  SECTION("criteria norms over the trajectory") {
    const auto k1 = criteria_norms(traj, 1, Exponent(Rational(2)), ExponentVec::parse("2,2"));
    CHECK(k1.finite);
    CHECK(k1.velocity_norm > 0.0);
    CHECK(k1.gradient_norm > 0.0);

    const auto k2 = criteria_norms(traj, 2, std::nullopt, ExponentVec::parse("4,4"));
    CHECK(k2.finite);
    CHECK(k2.criteria.dimension_adapted);

    const auto k3 = criteria_norms(traj, 3, std::nullopt, ExponentVec::parse("3/2,3/2"));
    CHECK(k3.finite);
    CHECK(k3.gradient_norm > 0.0);

    CHECK_THROWS_AS(criteria_norms(traj, 2, Exponent(Rational(3)), ExponentVec::parse("4,4")),
                    std::invalid_argument);
  }
}

TEST_CASE("cfl violation is flagged") {
  const GridSpec g = make_grid(2, 64);
  const NsSolver2D solver(g, 0.1);
  const auto s = solver.make_state(taylor_green(g, 0.1, 0.0));
  CHECK_THROWS_AS(solver.step(s, 1.0), std::runtime_error);
}

TEST_CASE("runs are deterministic and the store round trips") {
  const GridSpec g = make_grid(2, 32);
  const NsSolver2D solver(g, 0.1);
  NsRunConfig cfg;
  cfg.T = 0.05;
  cfg.dt = 1e-3;
  const auto a = run_ns(solver, random_divfree_velocity(g, 1, 2, 5u), cfg);
  const auto b = run_ns(solver, random_divfree_velocity(g, 1, 2, 5u), cfg);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].kinetic == b.samples[i].kinetic);
    CHECK(a.samples[i].grad_sq == b.samples[i].grad_sq);
  }
  REQUIRE(a.snapshots.size() == b.snapshots.size());
  for (std::size_t i = 0; i < a.snapshots.size(); ++i)
    CHECK(max_abs_diff(a.snapshots[i].u, b.snapshots[i].u) == 0.0);

  const std::filesystem::path dir = "test_traj_store";
  write_trajectory(a, dir);
  const auto back = read_trajectory(dir);
  CHECK(back.nu == a.nu);
  CHECK(back.times == a.times);
  REQUIRE(back.snapshots.size() == a.snapshots.size());
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
    CHECK(max_abs_diff(back.snapshots[i].u, a.snapshots[i].u) == 0.0);
    CHECK(max_abs_diff(back.snapshots[i].v, a.snapshots[i].v) == 0.0);
  }
  std::filesystem::remove_all(dir);
}
