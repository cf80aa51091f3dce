#include <doctest.h>

#include <random>

#include "mvlag/matpoly.hpp"
#include "oracles.hpp"

using namespace mvlag;

TEST_CASE("ring basics") {
  std::mt19937 rng(7);
  const RatMatPoly p = oracles::random_matpoly(rng, 3, 3);
  const RatMatPoly q = oracles::random_matpoly(rng, 3, 2);
  const RatMatPoly r = oracles::random_matpoly(rng, 3, 2);
  const RatMatPoly id = RatMatPoly::identity(3);
  const RatMatPoly x = RatMatPoly::variable(3);

  CHECK(p + RatMatPoly::zero(3) == p);
  CHECK(id * p == p);
  CHECK(p * id == p);
  CHECK(x * x == RatMatPoly::monomial(RatMatrix::Identity(3, 3), 2));
  CHECK((p * q) * r == p * (q * r));
  CHECK(p * (q + r) == p * q + p * r);
  CHECK((q + r) * p == q * p + r * p);
  CHECK_THROWS_AS(p + RatMatPoly::identity(2), std::invalid_argument);
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937 rng(11);
  CHECK(RatMatPoly::identity(2).derivative().is_zero());
  CHECK(RatMatPoly::monomial(RatMatrix::Identity(2, 2) * Rational(3), 2).derivative() ==
        RatMatPoly::monomial(RatMatrix::Identity(2, 2) * Rational(6), 1));
  for (int trial = 0; trial < 5; ++trial) {
    const RatMatPoly p = oracles::random_matpoly(rng, 3, 3);
    const RatMatPoly q = oracles::random_matpoly(rng, 3, 2);
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
  }
}

TEST_CASE("transpose is an antihomomorphism and an involution") {
  std::mt19937 rng(13);
  const RatMatPoly p = oracles::random_matpoly(rng, 3, 2);
  const RatMatPoly q = oracles::random_matpoly(rng, 3, 3);
  CHECK((p * q).transpose_poly() == q.transpose_poly() * p.transpose_poly());
  CHECK(p.transpose_poly().transpose_poly() == p);
}

TEST_CASE("nilpotent exponential") {
  SUBCASE("zero matrix gives the identity") {
    CHECK(nilpotent_exp<Rational>(RatMatrix::Zero(3, 3)) == RatMatPoly::identity(3));
  }
  SUBCASE("single step matrix") {
    RatMatrix a = RatMatrix::Zero(2, 2);
    a(1, 0) = Rational(-5, 2);
    CHECK(nilpotent_exp<Rational>(a) ==
          RatMatPoly::identity(2) + RatMatPoly::monomial(a, 1));
  }
  SUBCASE("exp(xA) exp(-xA) = I for random strictly lower A") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
      const RatMatrix a = oracles::random_strictly_lower(rng, 4);
      CHECK(nilpotent_exp<Rational>(a) * nilpotent_exp<Rational>(a, true) ==
            RatMatPoly::identity(4));
    }
  }
  SUBCASE("group law after scalar substitution") {
    std::mt19937 rng(19);
    const RatMatrix a = oracles::random_strictly_lower(rng, 4);
    const RatMatPoly e = nilpotent_exp<Rational>(a);
    const Rational x(2, 3), y(-1, 5);
    CHECK(matrices_equal<Rational>((e.eval(x) * e.eval(y)).eval(), e.eval(x + y)));
  }
  SUBCASE("non-nilpotent input is rejected") {
    CHECK_THROWS_AS(nilpotent_exp<Rational>(RatMatrix::Identity(2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("unipotent inversion") {
  CHECK(unipotent_inverse(RatMatPoly::identity(3)) == RatMatPoly::identity(3));

  RatMatrix e21 = RatMatrix::Zero(2, 2);
  e21(1, 0) = 1;
  const RatMatPoly p = RatMatPoly::identity(2) + RatMatPoly::monomial(e21, 1);
  CHECK(unipotent_inverse(p) == RatMatPoly::identity(2) - RatMatPoly::monomial(e21, 1));

  std::mt19937 rng(23);
  for (int n = 2; n <= 5; ++n) {
    const RatMatPoly u = oracles::random_unipotent(rng, n, 6 - n);
    const RatMatPoly inv = unipotent_inverse(u);
    CHECK(u * inv == RatMatPoly::identity(n));
    CHECK(inv * u == RatMatPoly::identity(n));
  }

  CHECK_THROWS_AS(unipotent_inverse(RatMatPoly::variable(2)), std::invalid_argument);
}

TEST_CASE("matrix pochhammer") {
  const RatMatPoly x = RatMatPoly::variable(2);
  CHECK(matrix_pochhammer(x, 0) == RatMatPoly::identity(2));
  CHECK(matrix_pochhammer(x, 1) == x);
  // scalar case reduces to x(x+1)
  CHECK(matrix_pochhammer(x, 2) == x * x + x);
}

TEST_CASE("exact linear solving") {
  std::mt19937 rng(29);
  SUBCASE("inverse of a random invertible matrix") {
    for (int trial = 0; trial < 4; ++trial) {
      RatMatrix m = oracles::random_matrix(rng, 4);
      m += Rational(10) * RatMatrix::Identity(4, 4);  // keeps it invertible
      const RatMatrix inv = exact_inverse<Rational>(m);
      CHECK(matrices_equal<Rational>((m * inv).eval(), RatMatrix::Identity(4, 4)));
    }
  }
  SUBCASE("singular matrix is rejected") {
    RatMatrix m = RatMatrix::Zero(2, 2);
    m(0, 0) = 1;
    CHECK_THROWS(exact_inverse<Rational>(m));
  }
}

TEST_CASE("bounded-degree right division") {
  SUBCASE("identity divisor returns the dividend") {
    std::mt19937 rng(31);
    const RatMatPoly r = oracles::random_matpoly(rng, 2, 3);
    CHECK(solve_right_linear<Rational>(RatMatPoly::identity(2), r, 3) == r);
  }
  SUBCASE("scalar factorization") {
    const RatMatPoly q = RatMatPoly::variable(1) + RatMatPoly::identity(1);
    const RatMatPoly r =
        RatMatPoly::monomial(RatMatrix::Identity(1, 1), 2) - RatMatPoly::identity(1);
    CHECK(solve_right_linear<Rational>(q, r, 1) ==
          RatMatPoly::variable(1) - RatMatPoly::identity(1));
  }
  SUBCASE("multiply-then-solve round trip") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 3; ++trial) {
      const RatMatPoly p = oracles::random_matpoly(rng, 3, 4);
      RatMatPoly q = oracles::random_matpoly(rng, 3, 2);
      q += RatMatPoly::constant((Rational(7) * RatMatrix::Identity(3, 3)).eval());
      CHECK(solve_right_linear<Rational>(q, p * q, 4) == p);
    }
  }
  SUBCASE("no solution is detected") {
    // x*I cannot divide a polynomial with nonzero constant term
    CHECK_THROWS(solve_right_linear<Rational>(RatMatPoly::variable(2),
                                              RatMatPoly::identity(2), 1));
  }
  SUBCASE("non-uniqueness is detected") {
    // dividing by the zero-column matrix x*E11 leaves the second row free
    RatMatrix e11 = RatMatrix::Zero(2, 2);
    e11(0, 0) = 1;
    const RatMatPoly q = RatMatPoly::monomial(e11, 1);
    CHECK_THROWS(solve_right_linear<Rational>(q, q, 1));
  }
}
