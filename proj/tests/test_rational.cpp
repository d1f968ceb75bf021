#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "aniso/exponents.hpp"
#include "aniso/rational.hpp"

using aniso::Exponent;
using aniso::ExponentVec;
using aniso::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(7, 11);
  CHECK(a.num() == 7);
  CHECK(a.den() == 11);
  CHECK(Rational(14, 22) == a);
  CHECK(Rational(-3, -4) == Rational(3, 4));
  CHECK(Rational(3, -4) == Rational(-3, 4));

  CHECK(Rational(1, 4) + Rational(1, 6) == Rational(5, 12));
  CHECK(Rational(5, 12) - Rational(1, 2) == Rational(-1, 12));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(7, 11) / Rational(7, 11) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(aniso::abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("7/11") == Rational(7, 11));
  CHECK(Rational::parse("-7/11") == Rational(-7, 11));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("12/5").str() == "12/5");
  CHECK(Rational(4).str() == "4");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("exponents encode [1, inf] with exact reciprocals") {
  const Exponent inf = Exponent::infinity();
  CHECK(inf.is_infinite());
  CHECK(inf.reciprocal() == Rational(0));
  CHECK(Exponent(Rational(4)).reciprocal() == Rational(1, 4));
  CHECK_THROWS_AS(Exponent(Rational(1, 2)), std::invalid_argument);

  CHECK(Exponent(Rational(4)).conjugate() == Exponent(Rational(4, 3)));
  CHECK(Exponent(Rational(1)).conjugate().is_infinite());
  CHECK(inf.conjugate() == Exponent(Rational(1)));

  CHECK(Exponent(2) < inf);
  CHECK(Exponent(2) < Exponent(3));
  CHECK(Exponent::parse("inf").is_infinite());
  CHECK(Exponent::parse("3/2") == Exponent(Rational(3, 2)));
}

TEST_CASE("exponent vectors: reciprocal sums and parsing") {
  const ExponentVec p = ExponentVec::parse("4,6");
  REQUIRE(p.size() == 2);
  CHECK(p.reciprocal_sum() == Rational(5, 12));

  const ExponentVec q = ExponentVec::parse("2,4");
  CHECK(q.reciprocal_sum() == Rational(3, 4));

  const ExponentVec with_inf = ExponentVec::parse("inf,1");
  CHECK(with_inf.reciprocal_sum() == Rational(1));
  CHECK(!with_inf.all_finite());
  CHECK(!with_inf.strictly_between_one_and_infinity());
  CHECK(p.strictly_between_one_and_infinity());
  CHECK(with_inf.str() == "inf,1");

  CHECK_THROWS_AS(ExponentVec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ExponentVec::parse("2,"), std::invalid_argument);
}

TEST_CASE("random rational identities", "[property]") {
  std::mt19937_64 rng(20240811u);
  std::uniform_int_distribution<std::int64_t> num(-30, 30);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  for (int it = 0; it < 500; ++it) {
    const Rational x(num(rng), den(rng));
    const Rational y(num(rng), den(rng));
    const Rational z(num(rng), den(rng));
    CHECK((x + y) - y == x);
    CHECK((x - y) + (y - z) == x - z);
    CHECK(x * (y + z) == x * y + x * z);
    if (y != Rational(0)) CHECK((x / y) * y == x);
  }
}
