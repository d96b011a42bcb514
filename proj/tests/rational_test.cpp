#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "isr/rational.hpp"

using isr::BigInt;
using isr::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-2), BigInt(4)) == Rational(BigInt(1), BigInt(-2)));
  CHECK(Rational(BigInt(1), BigInt(-2)).num() == BigInt(-1));
  CHECK(Rational(BigInt(1), BigInt(-2)).den() == BigInt(2));
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("field arithmetic is exact") {
  const Rational third(BigInt(1), BigInt(3));
  CHECK(third + third + third == Rational(1));
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(1) / third == Rational(3));
  CHECK(third - third == Rational(0));
  CHECK(-third == Rational(BigInt(-1), BigInt(3)));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  /* 0.1 + 0.2 != 0.3 in double; the whole point of the exact scalar. */
  const Rational tenth(BigInt(1), BigInt(10));
  const Rational fifth(BigInt(1), BigInt(5));
  CHECK(tenth + fifth == Rational(BigInt(3), BigInt(10)));
}

TEST_CASE("compound assignment matches the binary operators") {
  Rational r(BigInt(3), BigInt(4));
  r += Rational(BigInt(1), BigInt(4));
  CHECK(r == Rational(1));
  r -= Rational(BigInt(1), BigInt(2));
  CHECK(r == Rational(BigInt(1), BigInt(2)));
  r *= Rational(4);
  CHECK(r == Rational(2));
  r /= Rational(BigInt(2), BigInt(3));
  CHECK(r == Rational(3));
}

TEST_CASE("ordering is the rational order, not the textual one") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(1), BigInt(3)));
  CHECK(Rational(BigInt(7), BigInt(10)) > Rational(BigInt(2), BigInt(3)));
  CHECK(Rational(2) >= Rational(2));
  CHECK(Rational(2) <= Rational(2));
}

TEST_CASE("predicates and sign") {
  CHECK(Rational(0).is_zero());
  CHECK(!Rational(BigInt(1), BigInt(9)).is_zero());
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(BigInt(5), BigInt(2)).is_integer());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(3).sign() == 1);
  CHECK(isr::abs(Rational(BigInt(-3), BigInt(7))) == Rational(BigInt(3), BigInt(7)));
}

TEST_CASE("pow by squaring") {
  CHECK(isr::pow(Rational(BigInt(1), BigInt(2)), 10) == Rational(BigInt(1), BigInt(1024)));
  CHECK(isr::pow(Rational(-2), 3) == Rational(-8));
  CHECK(isr::pow(Rational(7), 0) == Rational(1));
}

TEST_CASE("string round trip is exact, integers print without a slash") {
  CHECK(isr::to_string(Rational(BigInt(-3), BigInt(7))) == "-3/7");
  CHECK(isr::to_string(Rational(42)) == "42");
  CHECK(isr::rational_from_string("-3/7") == Rational(BigInt(-3), BigInt(7)));
  CHECK(isr::rational_from_string("42") == Rational(42));

  /* Numbers wider than any machine word survive the round trip. */
  const Rational huge(isr::pow(Rational(10), 40).num(), BigInt(7));
  CHECK(isr::rational_from_string(isr::to_string(huge)) == huge);
}

TEST_CASE("to_double is correctly rounded for representable values") {
  CHECK(Rational(BigInt(1), BigInt(2)).to_double() == 0.5);
  CHECK(Rational(BigInt(1), BigInt(3)).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("log2_abs works far outside double range") {
  CHECK(isr::log2_abs(Rational(8)) == doctest::Approx(3.0));
  CHECK(isr::log2_abs(Rational(BigInt(1), BigInt(8))) == doctest::Approx(-3.0));
  CHECK(isr::log2_abs(Rational(-4)) == doctest::Approx(2.0));

  /* 2^5000 overflows double; the log must still come out right. */
  const Rational enormous(isr::pow(Rational(2), 5000));
  CHECK(!std::isfinite(enormous.to_double()));
  CHECK(isr::log2_abs(enormous) == doctest::Approx(5000.0).epsilon(1e-12));
  CHECK(isr::log2_abs(Rational(1) / enormous) == doctest::Approx(-5000.0).epsilon(1e-12));
}

TEST_CASE("bigint to_string handles both signs") {
  CHECK(isr::to_string(BigInt(0)) == "0");
  CHECK(isr::to_string(BigInt(-12345)) == "-12345");
}
