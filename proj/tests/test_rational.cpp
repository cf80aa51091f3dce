#include <doctest.h>

#include "mvlag/rational.hpp"

using namespace mvlag;

TEST_CASE("rational parsing and printing round trip") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-6/4") == Rational(-3, 2));
  CHECK(rational_from_string("5") == Rational(5));
  CHECK(to_string(rational_from_string("-6/4")) == "-3/2");
  CHECK(rational_from_string(to_string(Rational(22, 7))) == Rational(22, 7));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("pochhammer") {
  const Rational x(7, 3);
  CHECK(pochhammer(x, 0) == 1);
  CHECK(pochhammer(Rational(1), 5) == factorial(5));
  CHECK(pochhammer(Rational(-3), 5) == 0);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
}

TEST_CASE("binomial with rational upper argument") {
  CHECK(binomial(Rational(4), 2) == 6);
  CHECK(binomial(Rational(-1), 3) == -1);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(3), -1) == 0);
}
