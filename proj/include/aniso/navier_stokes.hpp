// Planar periodic incompressible Navier-Stokes in velocity form, plus the
// energy-equality diagnostics: exact Taylor-Green oracle, energy budgets,
// criteria space-time norms, and the truncated-flux convergence series.
//
// Discretization: Fourier collocation with the 2/3-rule (modes |m_a| <=
// floor(N_a/3) kept, so quadratic products are alias-free on the kept set),
// Leray projection for pressure elimination, exact integrating-factor
// viscosity, and a three-stage strong-stability RK scheme for advection.
// With the nonlinearity off a step reduces exactly to the viscous decay
// factor e^{-nu |xi|^2 dt}.
#pragma once

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "aniso/dyadic.hpp"
#include "aniso/families.hpp"
#include "aniso/field_io.hpp"
#include "aniso/fractional.hpp"
#include "aniso/gn_algebra.hpp"
#include "aniso/mixed_norm.hpp"

namespace aniso {

struct VelocityField {
  RealField u, v;
};

// v = (-cos x sin y, sin x cos y) e^{-2 nu t}: exact solution; the advective
// term is a pure gradient and drops under the pressure projection.
inline VelocityField taylor_green(const GridSpec& g, double nu, double t) {
  if (g.n != 2) throw std::invalid_argument("taylor_green: requires n = 2");
  const double amp = std::exp(-2.0 * nu * t);
  VelocityField out;
  out.u = sample_field(g, [&](double x, double y, double) {
    return -amp * std::cos(x) * std::sin(y);
  });
  out.v = sample_field(g, [&](double x, double y, double) {
    return amp * std::sin(x) * std::cos(y);
  });
  return out;
}

namespace ns_detail {

struct Modes {
  std::vector<double> xi1, xi2;   // frequency per storage index
  std::vector<bool> keep;         // 2/3-rule mask
  GridSpec grid;

  explicit Modes(const GridSpec& g) : grid(g) {
    if (g.n != 2) throw std::invalid_argument("ns solver: requires n = 2");
    const std::size_t total = static_cast<std::size_t>(g.point_count());
    xi1.resize(total);
    xi2.resize(total);
    keep.resize(total);
    const int k1 = g.sizes[0] / 3, k2 = g.sizes[1] / 3;
    for_each_index(g, [&](std::int64_t idx, int i1, int i2, int) {
      const auto i = static_cast<std::size_t>(idx);
      xi1[i] = g.xi(0, i1);
      xi2[i] = g.xi(1, i2);
      const int m1 = g.signed_mode(0, i1), m2 = g.signed_mode(1, i2);
      keep[i] = std::abs(m1) <= k1 && std::abs(m2) <= k2;
    });
  }
};

}  // namespace ns_detail

class NsSolver2D {
 public:
  NsSolver2D(const GridSpec& g, double nu)
      : modes_(g), nu_(nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("NsSolver2D: nu must be positive");
  }

  const GridSpec& grid() const { return modes_.grid; }
  double nu() const { return nu_; }

  struct State {
    SpectralField uh, vh;
    double time = 0.0;
  };

  State make_state(const VelocityField& vel, double t = 0.0) const {
    State s{forward(vel.u), forward(vel.v), t};
    apply_mask(s);
    project(s.uh, s.vh);
    return s;
  }

  VelocityField velocity(const State& s) const {
    return {detail::inverse_real_part(s.uh), detail::inverse_real_part(s.vh)};
  }

  // Spectral divergence magnitude relative to the field size.
  double relative_divergence(const State& s) const {
    double div = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < s.uh.coeffs.size(); ++i) {
      div = std::max(div, std::abs(modes_.xi1[i] * s.uh.coeffs[i] +
                                   modes_.xi2[i] * s.vh.coeffs[i]));
      mag = std::max(mag, std::hypot(modes_.xi1[i], modes_.xi2[i]) *
                              std::max(std::abs(s.uh.coeffs[i]),
                                       std::abs(s.vh.coeffs[i])));
    }
    return mag > 0.0 ? div / mag : 0.0;
  }

  double kinetic_energy(const State& s) const {
    double e = 0.0;
    for (std::size_t i = 0; i < s.uh.coeffs.size(); ++i)
      e += std::norm(s.uh.coeffs[i]) + std::norm(s.vh.coeffs[i]);
    return 0.5 * e * modes_.grid.volume();
  }

  double grad_norm_sq(const State& s) const {
    double e = 0.0;
    for (std::size_t i = 0; i < s.uh.coeffs.size(); ++i) {
      const double k2 =
          modes_.xi1[i] * modes_.xi1[i] + modes_.xi2[i] * modes_.xi2[i];
      e += k2 * (std::norm(s.uh.coeffs[i]) + std::norm(s.vh.coeffs[i]));
    }
    return e * modes_.grid.volume();
  }

  // Dealiased, projected advection term -(v.grad)v in spectral space.
  void nonlinear_rhs(const State& s, SpectralField& nu_out,
                     SpectralField& nv_out) const {
    const GridSpec& g = modes_.grid;
    const RealField u = detail::inverse_real_part(s.uh);
    const RealField v = detail::inverse_real_part(s.vh);
    const RealField ux = deriv(s.uh, 0), uy = deriv(s.uh, 1);
    const RealField vx = deriv(s.vh, 0), vy = deriv(s.vh, 1);
    RealField a(g), b(g);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      a.values[i] = -(u.values[i] * ux.values[i] + v.values[i] * uy.values[i]);
      b.values[i] = -(u.values[i] * vx.values[i] + v.values[i] * vy.values[i]);
    }
    nu_out = forward(a);
    nv_out = forward(b);
    for (std::size_t i = 0; i < nu_out.coeffs.size(); ++i) {
      if (!modes_.keep[i]) {
        nu_out.coeffs[i] = 0.0;
        nv_out.coeffs[i] = 0.0;
      }
    }
    project(nu_out, nv_out);
  }

  // Advective CFL number dt (|u| xi1_max + |v| xi2_max); the three-stage
  // scheme holds the imaginary axis up to sqrt(3).
  double cfl_number(const State& s, double dt) const {
    const VelocityField vel = velocity(s);
    const double k1 = (modes_.grid.sizes[0] / 3) * modes_.grid.freq_step(0);
    const double k2 = (modes_.grid.sizes[1] / 3) * modes_.grid.freq_step(1);
    return dt * (max_abs(vel.u) * k1 + max_abs(vel.v) * k2);
  }

  State step(const State& s, double dt, bool advect = true) const {
    if (advect && cfl_number(s, dt) > kCflLimit)
      throw std::runtime_error("NsSolver2D::step: CFL violation (reduce dt)");
    SpectralField gu(modes_.grid), gv(modes_.grid);

    // Stage 1: v1 = E(dt) (v + dt G(v))
    if (advect) nonlinear_rhs(s, gu, gv);
    State v1{s.uh, s.vh, s.time + dt};
    axpy(v1, dt, gu, gv, advect);
    decay(v1, dt);

    // Stage 2: v2 = 3/4 E(dt/2) v + 1/4 E(-dt/2) (v1 + dt G(v1))
    if (advect) nonlinear_rhs(v1, gu, gv);
    State v2 = v1;
    axpy(v2, dt, gu, gv, advect);
    decay(v2, -0.5 * dt);
    State vhalf{s.uh, s.vh, s.time + 0.5 * dt};
    decay(vhalf, 0.5 * dt);
    lincomb(v2, 0.75, vhalf, 0.25, v2);

    // Step: v+ = 1/3 E(dt) v + 2/3 E(dt/2) (v2 + dt G(v2))
    if (advect) nonlinear_rhs(v2, gu, gv);
    State v3 = v2;
    axpy(v3, dt, gu, gv, advect);
    decay(v3, 0.5 * dt);
    State vfull{s.uh, s.vh, s.time + dt};
    decay(vfull, dt);
    lincomb(v3, 1.0 / 3.0, vfull, 2.0 / 3.0, v3);
    v3.time = s.time + dt;
    return v3;
  }

  static constexpr double kCflLimit = 1.7;

 private:
  RealField deriv(const SpectralField& f, int axis) const {
    SpectralField d = f;
    const auto& xi = axis == 0 ? modes_.xi1 : modes_.xi2;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
      d.coeffs[i] *= std::complex<double>(0.0, xi[i]);
    return detail::inverse_real_part(d);
  }

  void apply_mask(State& s) const {
    for (std::size_t i = 0; i < s.uh.coeffs.size(); ++i) {
      if (!modes_.keep[i]) {
        s.uh.coeffs[i] = 0.0;
        s.vh.coeffs[i] = 0.0;
      }
    }
  }

  void project(SpectralField& uh, SpectralField& vh) const {
    for (std::size_t i = 0; i < uh.coeffs.size(); ++i) {
      const double x1 = modes_.xi1[i], x2 = modes_.xi2[i];
      const double k2 = x1 * x1 + x2 * x2;
      if (k2 == 0.0) continue;
      const std::complex<double> d = (x1 * uh.coeffs[i] + x2 * vh.coeffs[i]) / k2;
      uh.coeffs[i] -= x1 * d;
      vh.coeffs[i] -= x2 * d;
    }
  }

  void decay(State& s, double tau) const {
    for (std::size_t i = 0; i < s.uh.coeffs.size(); ++i) {
      const double k2 =
          modes_.xi1[i] * modes_.xi1[i] + modes_.xi2[i] * modes_.xi2[i];
      const double e = std::exp(-nu_ * k2 * tau);
      s.uh.coeffs[i] *= e;
      s.vh.coeffs[i] *= e;
    }
  }

  static void axpy(State& s, double dt, const SpectralField& gu,
                   const SpectralField& gv, bool advect) {
    if (!advect) return;
    for (std::size_t i = 0; i < s.uh.coeffs.size(); ++i) {
      s.uh.coeffs[i] += dt * gu.coeffs[i];
      s.vh.coeffs[i] += dt * gv.coeffs[i];
    }
  }

  static void lincomb(State& out, double a, const State& x, double b, const State& y) {
    for (std::size_t i = 0; i < out.uh.coeffs.size(); ++i) {
      out.uh.coeffs[i] = a * x.uh.coeffs[i] + b * y.uh.coeffs[i];
      out.vh.coeffs[i] = a * x.vh.coeffs[i] + b * y.vh.coeffs[i];
    }
  }

  ns_detail::Modes modes_;
  double nu_;
};

// Per-step scalar diagnostics recorded along a run.
struct EnergySample {
  double t = 0.0;
  double kinetic = 0.0;   // (1/2) ||v||_2^2
  double grad_sq = 0.0;   // ||grad v||_2^2
};

struct VelocityTrajectory {
  GridSpec grid;
  double nu = 0.0;
  double dt = 0.0;
  std::vector<double> times;                  // snapshot times
  std::vector<VelocityField> snapshots;       // sparse full fields
  std::vector<EnergySample> samples;          // dense, every step
};

struct NsRunConfig {
  double nu = 0.1;
  double T = 1.0;
  double dt = 5e-4;          // also bounded by the CFL limit at start
  int snapshot_stride = 0;   // 0: choose ~32 snapshots
};

inline VelocityTrajectory run_ns(const NsSolver2D& solver, const VelocityField& init,
                                 const NsRunConfig& cfg) {
  if (!(cfg.T > 0.0) || !(cfg.dt > 0.0))
    throw std::invalid_argument("run_ns: T and dt must be positive");
  const int steps = static_cast<int>(std::ceil(cfg.T / cfg.dt - 1e-12));
  const double dt = cfg.T / steps;
  const int stride = cfg.snapshot_stride > 0 ? cfg.snapshot_stride
                                             : std::max(1, steps / 32);
  VelocityTrajectory traj;
  traj.grid = solver.grid();
  traj.nu = solver.nu();
  traj.dt = dt;

  NsSolver2D::State s = solver.make_state(init, 0.0);
  auto record_sample = [&](const NsSolver2D::State& st) {
    traj.samples.push_back({st.time, solver.kinetic_energy(st), solver.grad_norm_sq(st)});
  };
  auto record_snapshot = [&](const NsSolver2D::State& st) {
    traj.times.push_back(st.time);
    traj.snapshots.push_back(solver.velocity(st));
  };
  record_sample(s);
  record_snapshot(s);
  for (int k = 1; k <= steps; ++k) {
    s = solver.step(s, dt);
    record_sample(s);
    if (k % stride == 0 || k == steps) record_snapshot(s);
  }
  return traj;
}

struct EnergyBudget {
  double t = 0.0;
  double kinetic = 0.0;      // (1/2) ||v(t)||_2^2
  double dissipation = 0.0;  // nu * integral_0^t ||grad v||_2^2 ds
  double initial = 0.0;      // (1/2) ||v_0||_2^2
  double residual = 0.0;     // kinetic + dissipation - initial
};

// Budgets at every snapshot time; the dissipation integral is the trapezoid
// over the dense per-step samples (snapshot times are sample points).
inline std::vector<EnergyBudget> energy_budget(const VelocityTrajectory& traj) {
  if (traj.samples.size() < 2)
    throw std::invalid_argument("energy_budget: need at least 2 samples");
  std::vector<double> cumulative(traj.samples.size(), 0.0);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const double dt = traj.samples[i].t - traj.samples[i - 1].t;
    cumulative[i] = cumulative[i - 1] +
                    0.5 * dt * (traj.samples[i].grad_sq + traj.samples[i - 1].grad_sq);
  }
  const double initial = traj.samples.front().kinetic;
  std::vector<EnergyBudget> out;
  std::size_t cursor = 0;
  for (double t : traj.times) {
    while (cursor + 1 < traj.samples.size() && traj.samples[cursor].t < t - 1e-12)
      ++cursor;
    EnergyBudget b;
    b.t = t;
    b.kinetic = traj.samples[cursor].kinetic;
    b.dissipation = traj.nu * cumulative[cursor];
    b.initial = initial;
    b.residual = b.kinetic + b.dissipation - b.initial;
    out.push_back(b);
  }
  return out;
}

struct CriteriaNormsReport {
  NsCriteria criteria;
  double velocity_norm = std::numeric_limits<double>::quiet_NaN();
  double gradient_norm = std::numeric_limits<double>::quiet_NaN();
  bool finite = false;
};

namespace ns_detail {

inline RealField speed_field(const VelocityField& v) {
  RealField out(v.u.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = std::hypot(v.u.values[i], v.v.values[i]);
  return out;
}

inline RealField grad_magnitude_field(const VelocityField& v) {
  const auto du = gradient(v.u);
  const auto dv = gradient(v.v);
  RealField out(v.u.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double f = du[0].values[i] * du[0].values[i] +
                     du[1].values[i] * du[1].values[i] +
                     dv[0].values[i] * dv[0].values[i] +
                     dv[1].values[i] * dv[1].values[i];
    out.values[i] = std::sqrt(f);
  }
  return out;
}

inline double trajectory_norm(const VelocityTrajectory& traj, const Exponent& time_p,
                              const ExponentVec& space,
                              RealField (*pointwise)(const VelocityField&)) {
  std::vector<std::pair<double, RealField>> snaps;
  snaps.reserve(traj.snapshots.size());
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
    snaps.emplace_back(traj.times[i], pointwise(traj.snapshots[i]));
  const double T = traj.times.back() - traj.times.front();
  return spacetime_norm(snaps, SpaceTimeExponents(time_p, space, T > 0 ? T : 1.0));
}

}  // namespace ns_detail

// Evaluates the space-time norms demanded by a criterion over the stored
// snapshots (planar analogue: 2-entry q, flagged in the exponent check).
inline CriteriaNormsReport criteria_norms(const VelocityTrajectory& traj, int kind,
                                          std::optional<Exponent> p,
                                          const ExponentVec& q) {
  CriteriaNormsReport rep;
  rep.criteria = ns_criteria_check(kind, p, q);
  if (!rep.criteria.admissible)
    throw std::invalid_argument("criteria_norms: exponents rejected: " +
                                rep.criteria.reason);
  if (traj.snapshots.size() < 2)
    throw std::invalid_argument("criteria_norms: need at least 2 snapshots");

  switch (kind) {
    case 1:
      rep.velocity_norm = ns_detail::trajectory_norm(
          traj, *rep.criteria.dual_time, *rep.criteria.dual_space,
          ns_detail::speed_field);
      rep.gradient_norm = ns_detail::trajectory_norm(
          traj, rep.criteria.time_p, q, ns_detail::grad_magnitude_field);
      rep.finite = std::isfinite(rep.velocity_norm) && std::isfinite(rep.gradient_norm);
      break;
    case 2:
      rep.velocity_norm = ns_detail::trajectory_norm(traj, rep.criteria.time_p, q,
                                                     ns_detail::speed_field);
      rep.finite = std::isfinite(rep.velocity_norm);
      break;
    default:
      rep.gradient_norm = ns_detail::trajectory_norm(traj, rep.criteria.time_p, q,
                                                     ns_detail::grad_magnitude_field);
      rep.finite = std::isfinite(rep.gradient_norm);
      break;
  }
  return rep;
}

struct FluxTermSeries {
  std::vector<int> N_values;
  std::vector<double> flux;  // commutator-form nonlinear flux per cutoff
};

namespace ns_detail {

// integral over the torus of S_N[v_j (Id - S_N^2) v_i] * S_N d_j v_i at one
// snapshot, summed over i, j.
inline double flux_integrand(const VelocityField& vel, int N,
                             const DyadicPartition& part) {
  const GridSpec& g = vel.u.grid;
  const double scale = std::ldexp(1.0, -N);
  const auto sn = [&](double x1, double x2, double x3) {
    return part.rho(scale * std::sqrt(x1 * x1 + x2 * x2 + x3 * x3));
  };
  const auto one_minus_sn2 = [&](double x1, double x2, double x3) {
    const double z = sn(x1, x2, x3);
    return 1.0 - z * z;
  };

  const RealField* comps[2] = {&vel.u, &vel.v};
  SpectralField comp_hat[2] = {forward(vel.u), forward(vel.v)};
  RealField high[2] = {RealField(g), RealField(g)};   // (Id - S_N^2) v_i
  for (int i = 0; i < 2; ++i) {
    SpectralField h = comp_hat[i];
    apply_multiplier(h, one_minus_sn2);
    high[i] = detail::inverse_real_part(h);
  }

  double total = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      RealField prod(g);
      for (std::size_t n = 0; n < prod.values.size(); ++n)
        prod.values[n] = comps[j]->values[n] * high[i].values[n];
      SpectralField ph = forward(prod);
      apply_multiplier(ph, sn);
      const RealField lhs = detail::inverse_real_part(ph);

      SpectralField dh = comp_hat[i];
      const int axis = j;
      apply_multiplier(dh, [&](double x1, double x2, double x3) {
        return sn(x1, x2, x3);
      });
      for_each_index(g, [&](std::int64_t idx, int i1, int i2, int) {
        const double xi = axis == 0 ? g.xi(0, i1) : g.xi(1, i2);
        dh.coeffs[static_cast<std::size_t>(idx)] *= std::complex<double>(0.0, xi);
      });
      const RealField rhs = detail::inverse_real_part(dh);

      double cell = 0.0;
      for (std::size_t n = 0; n < lhs.values.size(); ++n)
        cell += lhs.values[n] * rhs.values[n];
      total += cell * g.cell_volume();
    }
  }
  return total;
}

}  // namespace ns_detail

// Time-integrated commutator flux per dyadic cutoff 2^N; vanishes once the
// cutoff clears the trajectory's spectrum.
inline FluxTermSeries flux_convergence(const VelocityTrajectory& traj,
                                       const std::vector<int>& N_values,
                                       const DyadicPartition& part = {}) {
  if (N_values.empty())
    throw std::invalid_argument("flux_convergence: empty N list");
  if (traj.snapshots.size() < 2)
    throw std::invalid_argument("flux_convergence: need at least 2 snapshots");
  const int top = lowpass_identity_level(traj.grid, part);
  for (int N : N_values)
    if (N < 0 || N > top)
      throw std::invalid_argument("flux_convergence: cutoff 2^" + std::to_string(N) +
                                  " outside the resolvable dyadic range [0, 2^" +
                                  std::to_string(top) + "]");
  FluxTermSeries out;
  out.N_values = N_values;
  for (int N : N_values) {
    std::vector<double> integrand(traj.snapshots.size());
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
      integrand[i] = ns_detail::flux_integrand(traj.snapshots[i], N, part);
    double acc = 0.0;
    for (std::size_t i = 1; i < integrand.size(); ++i)
      acc += 0.5 * (traj.times[i] - traj.times[i - 1]) *
             (integrand[i] + integrand[i - 1]);
    out.flux.push_back(acc);
  }
  return out;
}

// Divergence-free random initial field with spectrum in the given shells.
inline VelocityField random_divfree_velocity(const GridSpec& g, int shell_lo,
                                             int shell_hi, std::uint64_t seed) {
  RealField stream(g);
  for (int j = shell_lo; j <= shell_hi; ++j) {
    const RealField layer = random_shell_field(g, j, seed + static_cast<std::uint64_t>(j));
    const double w = std::ldexp(1.0, -(j - shell_lo));
    for (std::size_t i = 0; i < stream.values.size(); ++i)
      stream.values[i] += w * layer.values[i];
  }
  // v = perp-grad of the stream function: automatically divergence-free.
  const auto d = gradient(stream);
  VelocityField out;
  out.u = -1.0 * d[1];
  out.v = d[0];
  // Normalize to unit max speed for comparable CFL behavior.
  double m = 0.0;
  for (std::size_t i = 0; i < out.u.values.size(); ++i)
    m = std::max(m, std::hypot(out.u.values[i], out.v.values[i]));
  if (m > 0.0) {
    out.u = (1.0 / m) * out.u;
    out.v = (1.0 / m) * out.v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trajectory store: directory of field containers plus a JSON manifest.

inline void write_trajectory(const VelocityTrajectory& traj,
                             const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json manifest;
  manifest["nu"] = traj.nu;
  manifest["dt"] = traj.dt;
  manifest["times"] = traj.times;
  manifest["grid"] = {{"n", traj.grid.n},
                      {"sizes", {traj.grid.sizes[0], traj.grid.sizes[1]}},
                      {"lengths", {traj.grid.lengths[0], traj.grid.lengths[1]}}};
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& s : traj.samples)
    samples.push_back({{"t", s.t}, {"kinetic", s.kinetic}, {"grad_sq", s.grad_sq}});
  manifest["samples"] = samples;
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    write_field(traj.snapshots[i].u, (dir / ("u_" + std::to_string(i) + ".anf")).string());
    write_field(traj.snapshots[i].v, (dir / ("v_" + std::to_string(i) + ".anf")).string());
  }
  std::ofstream os(dir / "manifest.json");
  os << manifest.dump(2) << '\n';
}

inline VelocityTrajectory read_trajectory(const std::filesystem::path& dir) {
  std::ifstream is(dir / "manifest.json");
  if (!is)
    throw std::runtime_error("read_trajectory: missing manifest in " + dir.string());
  const nlohmann::json manifest = nlohmann::json::parse(is);
  VelocityTrajectory traj;
  traj.nu = manifest.at("nu").get<double>();
  traj.dt = manifest.at("dt").get<double>();
  traj.times = manifest.at("times").get<std::vector<double>>();
  for (const auto& s : manifest.at("samples"))
    traj.samples.push_back({s.at("t").get<double>(), s.at("kinetic").get<double>(),
                            s.at("grad_sq").get<double>()});
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    VelocityField v;
    v.u = read_field((dir / ("u_" + std::to_string(i) + ".anf")).string());
    v.v = read_field((dir / ("v_" + std::to_string(i) + ".anf")).string());
    traj.snapshots.push_back(std::move(v));
  }
  if (!traj.snapshots.empty()) traj.grid = traj.snapshots.front().u.grid;
  return traj;
}

}  // namespace aniso
