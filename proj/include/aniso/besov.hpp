// Homogeneous anisotropic Besov and Sobolev norms over the truncated dyadic
// range, the Besov-into-Sobolev comparison, and the low-pass approximation
// sweep for space-time trajectories.
#pragma once

#include "aniso/dyadic.hpp"
#include "aniso/fractional.hpp"
#include "aniso/mixed_norm.hpp"
#include "aniso/sweep_report.hpp"

namespace aniso {

// || { 2^{js} ||block_j f||_{p} }_j ||_{l^r} over the resolvable range.
// The zero mode is not part of any block (norm of a homogeneous space
// modulo constants); exact for band-limited fields.
inline double besov_norm(const RealField& f, double s, const ExponentVec& p,
                         const Exponent& r, const DyadicPartition& part = {}) {
  const BlockRange range = block_range(f.grid, part);
  double acc = 0.0;
  double sup = 0.0;
  const bool linf = r.is_infinite();
  const double rv = linf ? 0.0 : r.value().to_double();
  for (int j = range.j_min; j <= range.j_max; ++j) {
    const double term = std::pow(2.0, s * j) *
                        mixed_lebesgue_norm(dyadic_block(f, j, part), p);
    if (linf)
      sup = std::max(sup, term);
    else
      acc += std::pow(term, rv);
  }
  return linf ? sup : std::pow(acc, 1.0 / rv);
}

inline double sobolev_norm(const RealField& f, double s, const ExponentVec& p) {
  return mixed_lebesgue_norm(fractional_laplacian(f, s), p);
}

struct EmbeddingReport {
  double besov = 0.0;
  double sobolev = 0.0;
  double ratio = 0.0;  // besov / sobolev, 0 when both vanish
};

// Ratio ||f||_{B^s_{p,inf}} / ||f||_{H^s_p}; bounded by a constant depending
// only on the profile, the dimension and s.
inline EmbeddingReport besov_embedding_check(const RealField& f, double s,
                                             const ExponentVec& p,
                                             const DyadicPartition& part = {}) {
  EmbeddingReport rep;
  rep.besov = besov_norm(f, s, p, Exponent::infinity(), part);
  rep.sobolev = sobolev_norm(f, s, p);
  rep.ratio = rep.sobolev > 0.0 ? rep.besov / rep.sobolev : 0.0;
  return rep;
}

// || S_j f - f ||_{L^p(0,T; L^q)} over j in j_range; decays to zero for
// trajectories resolved by the grid, exactly zero once the cutoff clears
// the spectrum.
inline SweepReport approx_identity_sweep(
    const std::vector<std::pair<double, RealField>>& traj,
    const SpaceTimeExponents& pq, const std::vector<int>& j_range,
    const DyadicPartition& part = {}) {
  if (j_range.empty())
    throw std::invalid_argument("approx_identity_sweep: empty j range");
  if (traj.empty())
    throw std::invalid_argument("approx_identity_sweep: empty trajectory");
  SweepReport rep;
  rep.kind = "approx_identity";
  const double ref = spacetime_norm(traj, pq);
  for (int j : j_range) {
    std::vector<std::pair<double, RealField>> diff;
    diff.reserve(traj.size());
    for (const auto& [t, f] : traj) diff.emplace_back(t, lowpass(f, j, part) - f);
    SweepPoint pt;
    pt.scale = std::ldexp(1.0, j);
    pt.lhs = spacetime_norm(diff, pq);
    pt.rhs = ref;
    pt.ratio = ref > 0.0 ? pt.lhs / ref : 0.0;
    rep.points.push_back(pt);
  }
  rep.finalize_ratios();
  rep.fit = fit_loglog(rep.points);
  bool decreasing = true;
  for (std::size_t i = 1; i < rep.points.size(); ++i)
    if (rep.points[i].lhs > rep.points[i - 1].lhs) decreasing = false;
  rep.metadata["decreasing"] = decreasing ? "true" : "false";
  rep.verdict = decreasing ? SweepVerdict::bounded : SweepVerdict::inconclusive;
  return rep;
}

}  // namespace aniso
