#include <doctest.h>

#include "mvlag/laguerre.hpp"
#include "oracles.hpp"

using namespace mvlag;

TEST_CASE("laguerre base cases") {
  const Rational a(5, 3);
  CHECK(laguerre(0, a) == RatPoly(1));
  CHECK(laguerre(1, a) == RatPoly({a + 1, Rational(-1)}));
  // degree-2 polynomial at parameter 0: 1 - 2x + x^2/2
  CHECK(laguerre(2, Rational(0)) == RatPoly({Rational(1), Rational(-2), Rational(1, 2)}));
}

TEST_CASE("laguerre against the generating function expansion") {
  for (const Rational& a : {Rational(0), Rational(1), Rational(3, 2), Rational(7, 3)})
    for (int n = 0; n <= 8; ++n)
      CHECK(laguerre(n, a) == oracles::laguerre_from_generating_function(n, a));
}

TEST_CASE("leading coefficient is (-1)^n/n!") {
  for (int n = 0; n <= 7; ++n) {
    Rational lead = 1 / factorial(n);
    if (n % 2 == 1) lead = -lead;
    CHECK(laguerre(n, Rational(9, 4)).coeff(n) == lead);
  }
}

TEST_CASE("three-term recurrence holds exactly") {
  const RatPoly x = RatPoly::variable();
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2), Rational(7, 3)})
    for (int n = 1; n <= 12; ++n) {
      const RatPoly lhs = Rational(n + 1) * laguerre(n + 1, a);
      const RatPoly rhs =
          (RatPoly(Rational(2 * n) + a + 1) - x) * laguerre(n, a) - (Rational(n) + a) * laguerre(n - 1, a);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("derivative lowers degree and shifts the parameter") {
  CHECK(laguerre_derivative_check(1, Rational(11, 7)));
  CHECK(laguerre_derivative_check(2, Rational(0)));
  CHECK(laguerre_derivative_check(5, Rational(3, 2)));
  for (int n = 1; n <= 9; ++n) CHECK(laguerre_derivative_check(n, Rational(5, 4)));
}

TEST_CASE("inversion sum collapses to the Kronecker delta") {
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2), Rational(7, 3)})
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= i; ++j) {
        const RatPoly s = laguerre_inversion_sum(i, j, a);
        if (i == j)
          CHECK(s == RatPoly(1));
        else
          CHECK(s.is_zero());
      }
}

TEST_CASE("parameter shift coefficients reassemble the polynomial") {
  SUBCASE("same parameter is the identity expansion") {
    const auto c = laguerre_parameter_shift(4, Rational(2), Rational(2));
    for (int k = 0; k < 4; ++k) CHECK(c[k] == 0);
    CHECK(c[4] == 1);
  }
  SUBCASE("degree one") {
    const Rational a(7, 2), l(1, 3);
    const auto c = laguerre_parameter_shift(1, a, l);
    CHECK(c[0] == a - l);
    CHECK(c[1] == 1);
  }
  SUBCASE("recombination is exact") {
    for (const auto& [a, l] : {std::pair{Rational(5, 2), Rational(1, 2)},
                               std::pair{Rational(3), Rational(17, 5)}})
      for (int n = 0; n <= 8; ++n) {
        const auto c = laguerre_parameter_shift(n, a, l);
        RatPoly sum;
        for (int k = 0; k <= n; ++k) sum += c[k] * laguerre(k, l);
        CHECK(sum == laguerre(n, a));
      }
  }
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite(0) == RatPoly(1));
  CHECK(hermite(1) == RatPoly({Rational(0), Rational(2)}));
  CHECK(hermite(4) ==
        RatPoly({Rational(12), Rational(0), Rational(-48), Rational(0), Rational(16)}));
}
