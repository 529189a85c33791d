#include <random>

#include "affdimer/errors.hpp"
#include "affdimer/rational.hpp"
#include "doctest.h"

using affdimer::Rational;

TEST_CASE("rational normalizes sign and lowest terms") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, -5).str() == "0/1");
  CHECK_THROWS_AS(Rational(1, 0), affdimer::InvalidInput);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+1/2") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), affdimer::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), affdimer::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), affdimer::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), affdimer::ParseError);
  const Rational big = Rational::parse("123456789012345678901234567890/11");
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "123456789012345678901234567890/11");
}

TEST_CASE("floor and frac") {
  CHECK(Rational(-1, 3).floor() == -1);
  CHECK(Rational(-1, 3).frac() == Rational(2, 3));
  CHECK(Rational(7, 2).frac() == Rational(1, 2));
  CHECK(Rational(-4).frac() == Rational(0));
  CHECK(Rational(5, 3).floor() == 1);
}

TEST_CASE("overflowing products promote to big and demote back") {
  const Rational p(2147483647, 2147483629);
  Rational acc(1);
  for (int i = 0; i < 6; ++i) acc *= p;
  CHECK_FALSE(acc.is_small());
  for (int i = 0; i < 6; ++i) acc /= p;
  CHECK(acc.is_small());
  CHECK(acc == Rational(1));
}

TEST_CASE("field identities against long double on random small values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK((a + b) * c == a * c + b * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(((a < b) == (a.to_double() < b.to_double()) || a.to_double() == b.to_double()));
    CHECK(a.frac() >= Rational(0));
    CHECK(a.frac() < Rational(1));
    CHECK(a.frac() + Rational(a.floor()) == a);
  }
}

TEST_CASE("mixed small and big comparisons") {
  const Rational big = Rational::parse("100000000000000000000000/3");
  CHECK(big > Rational(1));
  CHECK(-big < Rational(0));
  CHECK((big - big) == Rational(0));
  CHECK((big - big).is_small());
}
