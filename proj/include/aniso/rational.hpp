// Exact rational arithmetic for exponent bookkeeping.
// Small numerators/denominators only (exponent tuples, scaling balances);
// intermediate products go through __int128 and overflow past int64 throws.
#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aniso {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator-(const Rational& x) {
    return Rational(-x.num_, x.den_);
  }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return from_wide(wide(x.num_) * y.den_ + wide(y.num_) * x.den_,
                     wide(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return x + (-y);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return from_wide(wide(x.num_) * y.num_, wide(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_wide(wide(x.num_) * y.den_, wide(x.den_) * y.num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return !(x == y);
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return wide(x.num_) * y.den_ < wide(y.num_) * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return !(x < y);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "3", "-7/11", and terminating decimals like "1.25" (exact).
  static Rational parse(std::string_view text);

 private:
  using wide_t = __int128;
  static constexpr wide_t wide(std::int64_t v) { return static_cast<wide_t>(v); }

  static Rational from_wide(wide_t num, wide_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const wide_t g = gcd_wide(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide_t lo = std::numeric_limits<std::int64_t>::min();
    constexpr wide_t hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: value out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static wide_t gcd_wide(wide_t a, wide_t b) {
    while (b != 0) {
      const wide_t t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& x) {
  return x.num() < 0 ? -x : x;
}

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational::parse: bad input '" +
                                std::string(text) + "'");
  };
  if (text.empty()) fail();
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      if (num > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw std::overflow_error("Rational::parse: too many digits");
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
      any_digit = true;
    } else if (c == '.') {
      if (seen_point) fail();
      seen_point = true;
    } else if (c == '/') {
      if (seen_point || !any_digit || i + 1 >= text.size()) fail();
      std::int64_t d = 0;
      for (++i; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') fail();
        d = d * 10 + (text[i] - '0');
      }
      if (d == 0) fail();
      den = d;
      break;
    } else {
      fail();
    }
  }
  if (!any_digit) fail();
  return Rational(negative ? -num : num, den);
}

}  // namespace aniso
