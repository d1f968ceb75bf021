// Exact exponent algebra for the interpolation inequality
//   ||Lambda^sigma u||_{p} <= C ||u||_{q}^theta ||Lambda^s u||_{r}^{1-theta}
// over exponent vectors: admissibility of a full instance, the
// theta balance solve, per-axis scaling exponents, the Besov-side case
// classification, and the Navier-Stokes energy-criteria exponent checks.
// Everything here is rational arithmetic; no floating point.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aniso/exponents.hpp"

namespace aniso {

struct GNParams {
  int n = 0;
  Rational sigma{0};
  Rational s{1};
  Rational theta{0};
  ExponentVec p, q, r;

  void validate_shape() const {
    if (n < 1)
      throw std::invalid_argument("GNParams: dimension must be positive");
    if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != n ||
        static_cast<int>(r.size()) != n)
      throw std::invalid_argument("GNParams: exponent vectors must have length n");
  }

  // delta = sum 1/p_i - sigma - theta sum 1/q_i - (1-theta)(sum 1/r_i - s);
  // zero exactly when the balance clause holds.
  Rational balance_defect() const {
    return p.reciprocal_sum() - sigma - theta * q.reciprocal_sum() -
           (Rational(1) - theta) * (r.reciprocal_sum() - s);
  }
};

enum class Admissibility { admissible, violated, out_of_theorem_range };

struct AdmissibilityVerdict {
  Admissibility status = Admissibility::violated;
  std::vector<std::string> violated_clauses;
  bool boundary = false;  // theta == 1 - sigma/s with sigma > 0
  std::string note;

  bool admissible() const { return status == Admissibility::admissible; }
};

inline AdmissibilityVerdict check_admissible(const GNParams& gp) {
  gp.validate_shape();
  AdmissibilityVerdict v;
  if (gp.sigma < Rational(0) || gp.s <= gp.sigma) {
    v.status = Admissibility::out_of_theorem_range;
    v.note = "requires 0 <= sigma < s";
    return v;
  }
  if (!gp.p.strictly_between_one_and_infinity() ||
      !gp.q.strictly_between_one_and_infinity() ||
      !gp.r.strictly_between_one_and_infinity()) {
    v.status = Admissibility::out_of_theorem_range;
    v.note = "requires 1 < p,q,r < inf componentwise";
    return v;
  }

  if (gp.balance_defect() != Rational(0))
    v.violated_clauses.push_back("balance");

  for (int i = 0; i < gp.n; ++i) {
    const Rational lhs = gp.p[static_cast<std::size_t>(i)].reciprocal();
    const Rational rhs = gp.theta * gp.q[static_cast<std::size_t>(i)].reciprocal() +
                         (Rational(1) - gp.theta) * gp.r[static_cast<std::size_t>(i)].reciprocal();
    if (lhs > rhs) {
      v.violated_clauses.push_back("componentwise axis " + std::to_string(i + 1));
      break;
    }
  }

  const Rational theta_max = Rational(1) - gp.sigma / gp.s;
  if (gp.theta < Rational(0) || gp.theta > theta_max)
    v.violated_clauses.push_back("theta_range");
  v.boundary = gp.sigma > Rational(0) && gp.theta == theta_max;
  if (v.boundary) v.note = "boundary theta = 1 - sigma/s";

  v.status = v.violated_clauses.empty() ? Admissibility::admissible
                                        : Admissibility::violated;
  return v;
}

struct ThetaSolution {
  enum class Kind { unique, degenerate_all, degenerate_none } kind = Kind::unique;
  Rational theta{0};
  AdmissibilityVerdict verdict;
  std::string note;
};

// Solve the balance equation for theta and re-check full admissibility.
inline ThetaSolution solve_theta(int n, const Rational& sigma, const Rational& s,
                                 const ExponentVec& p, const ExponentVec& q,
                                 const ExponentVec& r) {
  if (!(s > Rational(0)))
    throw std::invalid_argument("solve_theta: requires s > 0");
  GNParams gp{n, sigma, s, Rational(0), p, q, r};
  gp.validate_shape();
  ThetaSolution out;
  const Rational numer = p.reciprocal_sum() - sigma - (r.reciprocal_sum() - s);
  const Rational denom = q.reciprocal_sum() - (r.reciprocal_sum() - s);
  if (denom == Rational(0)) {
    out.kind = numer == Rational(0) ? ThetaSolution::Kind::degenerate_all
                                    : ThetaSolution::Kind::degenerate_none;
    out.note = numer == Rational(0) ? "every theta solves the balance"
                                    : "no theta solves the balance";
    return out;
  }
  out.theta = numer / denom;
  gp.theta = out.theta;
  out.verdict = check_admissible(gp);
  return out;
}

struct Corollary13Exponents {
  bool ok = false;
  Rational grad_power{0};  // exponent on ||grad u||_{L^2}
  Rational u_power{0};     // exponent on ||u||_{L^2}
  std::string reason;
};

// Powers (3/2 - sum 1/q_i, sum 1/q_i - 1/2) for the L2-based 3D interpolation
// bound; requires q_i in [2, inf) and 1/2 <= sum 1/q_i <= 3/2.
inline Corollary13Exponents corollary13_exponents(const ExponentVec& q) {
  Corollary13Exponents out;
  if (q.size() != 3) {
    out.reason = "needs exactly 3 exponents";
    return out;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (q[i].is_infinite() || q[i].value() < Rational(2)) {
      out.reason = "q_i must lie in [2, inf)";
      return out;
    }
  }
  const Rational sum = q.reciprocal_sum();
  if (sum < Rational(1, 2) || sum > Rational(3, 2)) {
    out.reason = "sum 1/q_i must lie in [1/2, 3/2]";
    return out;
  }
  out.ok = true;
  out.grad_power = Rational(3, 2) - sum;
  out.u_power = sum - Rational(1, 2);
  return out;
}

struct ScalingExponents {
  std::vector<Rational> tau;          // 1/p_j - theta/q_j - (1-theta)/r_j
  Rational window_low{0};             // sigma - s(1-theta)
  bool balance_holds = false;         // sum(-tau) == s(1-theta) - sigma
  std::vector<int> out_of_window;     // axes (1-based) with tau outside [low, 0]
};

inline ScalingExponents scaling_exponents(const GNParams& gp) {
  gp.validate_shape();
  ScalingExponents out;
  const Rational one_minus_theta = Rational(1) - gp.theta;
  out.window_low = gp.sigma - gp.s * one_minus_theta;
  Rational sum(0);
  for (int j = 0; j < gp.n; ++j) {
    const Rational tau = gp.p[static_cast<std::size_t>(j)].reciprocal() -
                         gp.theta * gp.q[static_cast<std::size_t>(j)].reciprocal() -
                         one_minus_theta * gp.r[static_cast<std::size_t>(j)].reciprocal();
    if (tau < out.window_low || tau > Rational(0)) out.out_of_window.push_back(j + 1);
    sum += tau;
    out.tau.push_back(tau);
  }
  out.balance_holds = (-sum == gp.s * one_minus_theta - gp.sigma);
  return out;
}

// ---------------------------------------------------------------------------
// Besov-side case classification.

struct BesovGNParams {
  GNParams base;                   // exponents may include 1 and inf here
  std::optional<Rational> alpha;   // componentwise interpolation weight, if given
};

enum class CaseTag {
  I11, I12, I13, I14, I15,
  I21, I22, I23,
  I31, I32, I33, I34, I35,
  Case2, Case3
};

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I11: return "I11";
    case CaseTag::I12: return "I12";
    case CaseTag::I13: return "I13";
    case CaseTag::I14: return "I14";
    case CaseTag::I15: return "I15";
    case CaseTag::I21: return "I21";
    case CaseTag::I22: return "I22";
    case CaseTag::I23: return "I23";
    case CaseTag::I31: return "I31";
    case CaseTag::I32: return "I32";
    case CaseTag::I33: return "I33";
    case CaseTag::I34: return "I34";
    case CaseTag::I35: return "I35";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
  }
  return "?";
}

struct CaseClassification {
  enum class Verdict { valid, contradiction, excluded, invalid_params };
  CaseTag tag = CaseTag::Case3;
  Verdict verdict = Verdict::invalid_params;
  bool alpha_required = false;
  std::optional<Rational> alpha;  // solved or verified when required
  std::string note;

  bool usable() const { return verdict == Verdict::valid; }
};

namespace detail {

// Solve 1/p_i = alpha/q_i + (1-alpha)/r_i componentwise, or verify a given
// alpha; empty optional when no admissible alpha exists.
inline std::optional<Rational> solve_componentwise_alpha(
    const ExponentVec& p, const ExponentVec& q, const ExponentVec& r,
    const std::optional<Rational>& given) {
  std::optional<Rational> alpha = given;
  if (!alpha) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Rational dq = q[i].reciprocal() - r[i].reciprocal();
      if (dq != Rational(0)) {
        alpha = (p[i].reciprocal() - r[i].reciprocal()) / dq;
        break;
      }
    }
    if (!alpha) {
      // 1/q == 1/r on every axis: any alpha works iff p matches too.
      bool match = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].reciprocal() != r[i].reciprocal()) match = false;
      if (match) return Rational(1, 2);
      return std::nullopt;
    }
  }
  if (*alpha < Rational(0) || *alpha > Rational(1)) return std::nullopt;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational want = *alpha * q[i].reciprocal() +
                          (Rational(1) - *alpha) * r[i].reciprocal();
    if (p[i].reciprocal() != want) return std::nullopt;
  }
  return alpha;
}

}  // namespace detail

// Classify an instance into the subcase lattice of the dyadic-block proof.
// Contradictory patterns (I11, I13, I14, I15, I22, I23) report which identity
// rules them out; the degenerate diagonal s = sum(1/r - 1/q) is excluded by
// hypothesis.
inline CaseClassification classify_besov_case(const BesovGNParams& bp) {
  const GNParams& gp = bp.base;
  gp.validate_shape();
  CaseClassification out;

  const Rational P = gp.p.reciprocal_sum();
  const Rational Q = gp.q.reciprocal_sum();
  const Rational R = gp.r.reciprocal_sum();

  if (gp.sigma < Rational(0) || gp.s <= gp.sigma) {
    out.note = "requires 0 <= sigma < s";
    return out;
  }
  if (gp.s == R - Q) {
    out.tag = CaseTag::Case3;
    out.verdict = CaseClassification::Verdict::excluded;
    out.note = "excluded by hypothesis s != sum(1/r_i - 1/q_i)";
    return out;
  }

  const Rational A = Q + gp.sigma;

  if (A > P) {
    // Case 1 lattice: ordered by sum 1/r vs sum 1/p, then sum 1/q.
    if (R < P) {
      if (P == Q) {
        out.tag = CaseTag::I11;
        out.note = "contradiction: balance forces sum 1/p < sum 1/q";
      } else if (P < Q) {
        out.tag = CaseTag::I12;
      } else if (R < Q) {
        out.tag = CaseTag::I13;
        out.note = "contradiction: sum 1/r < sum 1/p forces sum 1/p < sum 1/q";
      } else if (R == Q) {
        out.tag = CaseTag::I14;
        out.note = "contradiction: balance forces sum 1/p < sum 1/q = sum 1/r";
      } else {
        out.tag = CaseTag::I15;
        out.note = "contradiction: sum 1/q below both sum 1/r and sum 1/p is "
                   "incompatible with the balance identity";
      }
    } else if (R == P) {
      if (P < Q) {
        out.tag = CaseTag::I21;
      } else if (P == Q) {
        out.tag = CaseTag::I22;
        out.note = "contradiction: equal reciprocal sums force theta = 1 - sigma/s";
      } else {
        out.tag = CaseTag::I23;
        out.note = "contradiction: symmetric to I15 (underspecified in the "
                   "source argument; classified symmetrically)";
      }
    } else {
      if (R == Q) {
        out.tag = CaseTag::I31;
      } else if (R < Q) {
        out.tag = CaseTag::I32;
      } else if (P < Q) {
        out.tag = CaseTag::I33;
      } else if (P == Q) {
        out.tag = CaseTag::I34;  // implies sigma > 0 since A > P
      } else {
        out.tag = CaseTag::I35;
      }
    }
  } else if (A < P) {
    out.tag = CaseTag::Case2;
  } else {
    // A == P with s != R - Q cannot satisfy the strict balance.
    out.note = "sum 1/q + sigma = sum 1/p requires s = sum(1/r - 1/q)";
    return out;
  }

  static const bool kContradiction[] = {true,  false, true, true, true,   // I11..I15
                                        false, true,  true,                // I21..I23
                                        false, false, false, false, false, // I31..I35
                                        false, false};                     // Case2, Case3
  if (kContradiction[static_cast<int>(out.tag)]) {
    out.verdict = CaseClassification::Verdict::contradiction;
    return out;
  }

  // Remaining tags are usable; now the full hypotheses must hold.
  if (gp.balance_defect() != Rational(0)) {
    out.verdict = CaseClassification::Verdict::invalid_params;
    out.note = "balance equation violated";
    return out;
  }
  const Rational theta_max = Rational(1) - gp.sigma / gp.s;
  if (!(gp.theta > Rational(0) && gp.theta < theta_max)) {
    out.verdict = CaseClassification::Verdict::invalid_params;
    out.note = "requires 0 < theta < 1 - sigma/s";
    return out;
  }

  const Rational lo = Q < R ? Q : R;
  const Rational hi = Q < R ? R : Q;
  out.alpha_required = (lo < P && P < hi) || (P == R && R < Q);
  if (out.alpha_required) {
    out.alpha = detail::solve_componentwise_alpha(gp.p, gp.q, gp.r, bp.alpha);
    if (!out.alpha) {
      out.verdict = CaseClassification::Verdict::invalid_params;
      out.note = "no componentwise alpha with 1/p = alpha/q + (1-alpha)/r";
      return out;
    }
  } else if (out.note.empty()) {
    out.note = "alpha not required in this region";
  }
  out.verdict = CaseClassification::Verdict::valid;
  return out;
}

// ---------------------------------------------------------------------------
// Energy-equality criteria exponent checks (four families).

struct NsCriteria {
  bool admissible = false;
  int kind = 0;
  Exponent time_p = Exponent::infinity();
  ExponentVec q;
  std::optional<Exponent> dual_time;   // kind 1: 2p/(p-1)
  std::optional<ExponentVec> dual_space;  // kind 1: 2q_i/(q_i-1)
  bool dimension_adapted = false;      // 2-entry q (planar diagnostic analogue)
  std::string reason;
};

namespace detail {

// 2e/(e-1), the exponent pairing ||v||^2-type terms; e in (1, inf].
inline Exponent double_dual(const Exponent& e) {
  if (e.is_infinite()) return Exponent(Rational(2));
  return Exponent(Rational(2) * e.value() / (e.value() - Rational(1)));
}

}  // namespace detail

// kind 1: free (p, q) with 1 < p, q <= inf; reports the paired dual exponents.
// kind 2: 1/p + sum 1/q = 1, sum 1/q <= 1,   1 < q <= 4.
// kind 3: 1/p + sum 1/q = 2, sum 1/q <= 2,   1 < q <= 9/5.
// kind 4: 1/p + (2/5) sum 1/q = 1, sum 1/q <= 5/3, 1 < q <= 3.
// For kinds 2-4 `p` may be omitted and is solved from the equation.
inline NsCriteria ns_criteria_check(int kind, std::optional<Exponent> p,
                                    const ExponentVec& q) {
  NsCriteria out;
  out.kind = kind;
  out.q = q;
  if (kind < 1 || kind > 4) throw std::invalid_argument("ns_criteria_check: kind must be 1..4");
  if (q.size() != 3 && q.size() != 2)
    throw std::invalid_argument("ns_criteria_check: q must have 2 or 3 entries");
  out.dimension_adapted = q.size() == 2;

  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].is_finite() && q[i].value() <= Rational(1)) {
      out.reason = "q_i must exceed 1";
      return out;
    }
  }
  const Rational sum = q.reciprocal_sum();

  auto check_upper = [&](const Rational& cap) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i].is_infinite() || q[i].value() > cap) return false;
    return true;
  };

  auto finish_with_equation = [&](const Rational& target, const Rational& weight,
                                  const Rational& sum_cap, const Rational& q_cap) {
    if (sum > sum_cap) {
      out.reason = "sum 1/q_i exceeds " + sum_cap.str();
      return;
    }
    if (!check_upper(q_cap)) {
      out.reason = "q_i must lie in (1, " + q_cap.str() + "]";
      return;
    }
    const Rational inv_p = target - weight * sum;
    if (inv_p < Rational(0)) {
      out.reason = "equation forces a negative 1/p";
      return;
    }
    Exponent solved = inv_p == Rational(0) ? Exponent::infinity()
                                           : Exponent(Rational(1) / inv_p);
    if (p && *p != solved) {
      out.reason = "given p inconsistent with the exponent equation (needs " +
                   solved.str() + ")";
      return;
    }
    out.time_p = solved;
    out.admissible = true;
  };

  switch (kind) {
    case 1: {
      if (!p) {
        out.reason = "kind 1 requires p";
        return out;
      }
      if (p->is_finite() && p->value() <= Rational(1)) {
        out.reason = "p must exceed 1";
        return out;
      }
      out.time_p = *p;
      out.dual_time = detail::double_dual(*p);
      std::vector<Exponent> duals;
      for (std::size_t i = 0; i < q.size(); ++i)
        duals.push_back(detail::double_dual(q[i]));
      out.dual_space = ExponentVec(std::move(duals));
      out.admissible = true;
      break;
    }
    case 2:
      finish_with_equation(Rational(1), Rational(1), Rational(1), Rational(4));
      break;
    case 3:
      finish_with_equation(Rational(2), Rational(1), Rational(2), Rational(9, 5));
      break;
    case 4:
      finish_with_equation(Rational(1), Rational(2, 5), Rational(5, 3), Rational(3));
      break;
  }
  return out;
}

}  // namespace aniso
