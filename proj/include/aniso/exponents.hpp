// Lebesgue exponents in [1, inf] with exact reciprocal arithmetic (1/inf = 0),
// exponent vectors for iterated mixed norms, and space-time exponent pairs.
#pragma once

#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aniso/rational.hpp"

namespace aniso {

class Exponent {
 public:
  Exponent() : finite_(true), value_(1) {}
  Exponent(const Rational& value) : finite_(true), value_(value) {
    if (value_ < Rational(1))
      throw std::invalid_argument("Exponent: value below 1: " + value_.str());
  }
  Exponent(std::int64_t value) : Exponent(Rational(value)) {}

  static Exponent infinity() {
    Exponent e;
    e.finite_ = false;
    return e;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw std::logic_error("Exponent: infinite has no value");
    return value_;
  }

  Rational reciprocal() const { return finite_ ? Rational(1) / value_ : Rational(0); }

  double to_double() const {
    return finite_ ? value_.to_double() : std::numeric_limits<double>::infinity();
  }

  // Hoelder conjugate: 1/p + 1/p' = 1. p must be >= 1; p=1 -> inf, p=inf -> 1.
  Exponent conjugate() const {
    if (!finite_) return Exponent(Rational(1));
    if (value_ == Rational(1)) return infinity();
    return Exponent(value_ / (value_ - Rational(1)));
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) {
    return a == b || a < b;
  }
  friend bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
  friend bool operator>=(const Exponent& a, const Exponent& b) { return b <= a; }

  std::string str() const { return finite_ ? value_.str() : "inf"; }

  static Exponent parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF") return infinity();
    return Exponent(Rational::parse(text));
  }

 private:
  bool finite_;
  Rational value_;
};

class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(std::vector<Exponent> entries) : entries_(std::move(entries)) {}
  ExponentVec(std::initializer_list<Exponent> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const Exponent& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Exponent>& entries() const { return entries_; }

  Rational reciprocal_sum() const {
    Rational s(0);
    for (const auto& e : entries_) s += e.reciprocal();
    return s;
  }

  bool all_finite() const {
    for (const auto& e : entries_)
      if (e.is_infinite()) return false;
    return true;
  }

  // Strict open range 1 < p_i < inf, the hypothesis of the Lebesgue-space
  // interpolation theorem.
  bool strictly_between_one_and_infinity() const {
    for (const auto& e : entries_)
      if (e.is_infinite() || e.value() <= Rational(1)) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) os << ',';
      os << entries_[i].str();
    }
    return os.str();
  }

  static ExponentVec parse(std::string_view text) {
    std::vector<Exponent> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      entries.push_back(Exponent::parse(text.substr(start, comma - start)));
      start = comma + 1;
      if (comma == text.size()) break;
    }
    if (entries.empty())
      throw std::invalid_argument("ExponentVec::parse: empty input");
    return ExponentVec(std::move(entries));
  }

  static ExponentVec uniform(std::size_t n, const Exponent& e) {
    return ExponentVec(std::vector<Exponent>(n, e));
  }

 private:
  std::vector<Exponent> entries_;
};

// Exponents for L^p(0,T; L^{q vector}) space-time norms.
struct SpaceTimeExponents {
  Exponent time_p;
  ExponentVec space;
  double horizon = 0.0;  // T > 0

  SpaceTimeExponents(Exponent tp, ExponentVec sp, double T)
      : time_p(tp), space(std::move(sp)), horizon(T) {
    if (!(horizon > 0.0))
      throw std::invalid_argument("SpaceTimeExponents: horizon must be positive");
  }
};

}  // namespace aniso
