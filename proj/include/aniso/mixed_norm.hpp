// Iterated anisotropic Lebesgue norms and the classical inequality checks
// (Hoelder, interpolation, Young) that hold exactly for the periodic
// rectangle quadrature.
//
// Norm order is fixed: the innermost norm runs along axis 1 (the fastest
// storage axis), the outermost along axis n. Finite exponents integrate
// |.|^p with the rectangle rule (= trapezoid on a periodic grid); infinite
// exponents take the grid maximum, a lower bound of the essential sup that
// is monotone under grid refinement.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "aniso/exponents.hpp"
#include "aniso/fft.hpp"
#include "aniso/field.hpp"

namespace aniso {

namespace detail {

// Reduce the contiguous leading axis of `work` (extent `n_axis`, `rows`
// blocks) into `out`, as an L^p norm with measure step h.
inline void reduce_axis(const std::vector<double>& work, int n_axis,
                        std::int64_t rows, const Exponent& p, double h,
                        std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(rows));
  const double* src = work.data();
  if (p.is_infinite()) {
    for (std::int64_t r = 0; r < rows; ++r, src += n_axis) {
      double m = 0.0;
      for (int i = 0; i < n_axis; ++i) m = std::max(m, std::abs(src[i]));
      out[static_cast<std::size_t>(r)] = m;
    }
    return;
  }
  const double pv = p.value().to_double();
  if (pv == 1.0) {
    for (std::int64_t r = 0; r < rows; ++r, src += n_axis) {
      double s = 0.0;
      for (int i = 0; i < n_axis; ++i) s += std::abs(src[i]);
      out[static_cast<std::size_t>(r)] = s * h;
    }
  } else if (pv == 2.0) {
    for (std::int64_t r = 0; r < rows; ++r, src += n_axis) {
      double s = 0.0;
      for (int i = 0; i < n_axis; ++i) s += src[i] * src[i];
      out[static_cast<std::size_t>(r)] = std::sqrt(s * h);
    }
  } else {
    for (std::int64_t r = 0; r < rows; ++r, src += n_axis) {
      double s = 0.0;
      for (int i = 0; i < n_axis; ++i) s += std::pow(std::abs(src[i]), pv);
      out[static_cast<std::size_t>(r)] = std::pow(s * h, 1.0 / pv);
    }
  }
}

}  // namespace detail

inline double mixed_lebesgue_norm(const RealField& f, const ExponentVec& p) {
  if (static_cast<int>(p.size()) != f.grid.n)
    throw std::invalid_argument("mixed_lebesgue_norm: exponent count != grid dimension");
  std::vector<double> work = f.values;
  std::vector<double> next;
  std::int64_t rows = f.grid.point_count();
  for (int a = 0; a < f.grid.n; ++a) {
    const int n_axis = f.grid.sizes[a];
    rows /= n_axis;
    detail::reduce_axis(work, n_axis, rows, p[static_cast<std::size_t>(a)],
                        f.grid.spacing(a), next);
    work.swap(next);
  }
  return work[0];
}

// Single-pass plain L^p norm, used to cross-check the iterated reduction
// when all exponents coincide.
inline double plain_lp_norm(const RealField& f, const Exponent& p) {
  if (p.is_infinite()) return max_abs(f);
  const double pv = p.value().to_double();
  double s = 0.0;
  for (double v : f.values) s += std::pow(std::abs(v), pv);
  return std::pow(s * f.grid.cell_volume(), 1.0 / pv);
}

// L^p(0,T; L^{q vec}) over a snapshot trajectory; time integral by trapezoid.
inline double spacetime_norm(
    const std::vector<std::pair<double, const RealField*>>& traj,
    const SpaceTimeExponents& pq) {
  if (traj.empty()) throw std::invalid_argument("spacetime_norm: empty trajectory");
  for (std::size_t i = 1; i < traj.size(); ++i)
    if (!(traj[i].first > traj[i - 1].first))
      throw std::invalid_argument("spacetime_norm: times must strictly increase");
  std::vector<double> snap(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i)
    snap[i] = mixed_lebesgue_norm(*traj[i].second, pq.space);
  if (pq.time_p.is_infinite())
    return *std::max_element(snap.begin(), snap.end());
  if (traj.size() < 2)
    throw std::invalid_argument("spacetime_norm: need >= 2 snapshots for finite time exponent");
  const double pv = pq.time_p.value().to_double();
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
    const double dt = traj[i + 1].first - traj[i].first;
    s += 0.5 * dt * (std::pow(snap[i], pv) + std::pow(snap[i + 1], pv));
  }
  return std::pow(s, 1.0 / pv);
}

inline double spacetime_norm(const std::vector<std::pair<double, RealField>>& traj,
                             const SpaceTimeExponents& pq) {
  std::vector<std::pair<double, const RealField*>> view;
  view.reserve(traj.size());
  for (const auto& [t, f] : traj) view.emplace_back(t, &f);
  return spacetime_norm(view, pq);
}

// Outcome of a two-sided inequality check: lhs <= rhs * (1 + slack).
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  double slack = 0.0;
  bool holds = false;
};

// Multiplicative quadrature slack: smooth well-resolved fields stay within
// 1e-6; rough data gets 1e-3.
inline constexpr double kSmoothSlack = 1e-6;
inline constexpr double kRoughSlack = 1e-3;

inline InequalityReport make_report(std::string name, double lhs, double rhs,
                                    double slack) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs > 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  r.slack = slack;
  r.holds = lhs <= rhs * (1.0 + slack);
  return r;
}

// Hoelder: ||fg||_1 <= ||f||_r ||g||_s with 1/r + 1/s = 1 componentwise.
inline InequalityReport holder_check(const RealField& f, const RealField& g,
                                     const ExponentVec& r, const ExponentVec& s,
                                     double slack = kSmoothSlack) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("holder_check: grid mismatch");
  if (r.size() != s.size() || static_cast<int>(r.size()) != f.grid.n)
    throw std::invalid_argument("holder_check: exponent dimension mismatch");
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].reciprocal() + s[i].reciprocal() != Rational(1))
      throw std::invalid_argument("holder_check: exponents not conjugate on axis " +
                                  std::to_string(i + 1));
  RealField prod(f.grid);
  for (std::size_t i = 0; i < prod.values.size(); ++i)
    prod.values[i] = f.values[i] * g.values[i];
  const double lhs = mixed_lebesgue_norm(prod, ExponentVec::uniform(r.size(), Exponent(1)));
  const double rhs = mixed_lebesgue_norm(f, r) * mixed_lebesgue_norm(g, s);
  return make_report("holder", lhs, rhs, slack);
}

// Interpolation: ||f||_r <= ||f||_s^alpha ||f||_t^(1-alpha) with
// 1/r = alpha/s + (1-alpha)/t componentwise.
inline InequalityReport interpolation_check(const RealField& f, const ExponentVec& r,
                                            const ExponentVec& s, const ExponentVec& t,
                                            const Rational& alpha,
                                            double slack = kSmoothSlack) {
  if (alpha < Rational(0) || alpha > Rational(1))
    throw std::invalid_argument("interpolation_check: alpha outside [0,1]");
  if (r.size() != s.size() || r.size() != t.size() ||
      static_cast<int>(r.size()) != f.grid.n)
    throw std::invalid_argument("interpolation_check: exponent dimension mismatch");
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Rational want = alpha * s[i].reciprocal() +
                          (Rational(1) - alpha) * t[i].reciprocal();
    if (r[i].reciprocal() != want)
      throw std::invalid_argument(
          "interpolation_check: exponent relation violated on axis " +
          std::to_string(i + 1));
  }
  const double a = alpha.to_double();
  const double lhs = mixed_lebesgue_norm(f, r);
  const double rhs = std::pow(mixed_lebesgue_norm(f, s), a) *
                     std::pow(mixed_lebesgue_norm(f, t), 1.0 - a);
  return make_report("interpolation", lhs, rhs, slack);
}

// Periodic convolution (f * g)(x) = integral f(y) g(x - y) dy, evaluated
// spectrally; exact for the grid quadrature.
inline RealField convolve(const RealField& f, const RealField& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("convolve: grid mismatch");
  SpectralField F = forward(f);
  const SpectralField G = forward(g);
  const double vol = f.grid.volume();
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) F.coeffs[i] *= vol * G.coeffs[i];
  return detail::inverse_real_part(F);
}

// Young: ||f*g||_r <= ||f||_p ||g||_q with 1 + 1/r = 1/p + 1/q componentwise.
inline InequalityReport young_check(const RealField& f, const RealField& g,
                                    const ExponentVec& p, const ExponentVec& q,
                                    const ExponentVec& r,
                                    double slack = kSmoothSlack) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("young_check: grid mismatch");
  if (p.size() != q.size() || p.size() != r.size() ||
      static_cast<int>(p.size()) != f.grid.n)
    throw std::invalid_argument("young_check: exponent dimension mismatch");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (Rational(1) + r[i].reciprocal() != p[i].reciprocal() + q[i].reciprocal())
      throw std::invalid_argument("young_check: exponent relation violated on axis " +
                                  std::to_string(i + 1));
  }
  const double lhs = mixed_lebesgue_norm(convolve(f, g), r);
  const double rhs = mixed_lebesgue_norm(f, p) * mixed_lebesgue_norm(g, q);
  return make_report("young", lhs, rhs, slack);
}

}  // namespace aniso
