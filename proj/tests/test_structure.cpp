#include <doctest.h>

#include "mvlag/structure.hpp"

using namespace mvlag;

namespace {
StructParams rational_mu_params() {
  return StructParams(4, Rational(5, 2),
                      {Rational(1), Rational(2, 3), Rational(-1, 2), Rational(3)});
}
}  // namespace

TEST_CASE("step matrix") {
  CHECK(is_zero_matrix<Rational>(step_matrix(StructParams::unit(1, 1))));

  const StructParams p2(2, Rational(1), {Rational(1), Rational(1)});
  RatMatrix expected = RatMatrix::Zero(2, 2);
  expected(1, 0) = -1;
  CHECK(matrices_equal<Rational>(step_matrix(p2), expected));

  const RatMatrix a = step_matrix(rational_mu_params());
  RatMatrix power = a;
  for (int k = 1; k < 4; ++k) power = (power * a).eval();
  CHECK(is_zero_matrix<Rational>(power));
}

TEST_CASE("index matrix") {
  CHECK(index_matrix(1)(0, 0) == 1);
  const RatMatrix j = index_matrix(3);
  for (int k = 1; k <= 3; ++k) CHECK(at1(j, k, k) == k);
  const RatMatrix s = scale_matrix(rational_mu_params());
  const RatMatrix j4 = index_matrix(4);
  CHECK(matrices_equal<Rational>((j4 * s).eval(), (s * j4).eval()));
}

TEST_CASE("triangle entries and derivative identity") {
  CHECK(laguerre_triangle(StructParams::unit(1, Rational(7, 2))) == RatMatPoly::identity(1));

  const StructParams p2(2, Rational(3, 4), {Rational(1), Rational(1)});
  const RatMatPoly l2 = laguerre_triangle(p2);
  // entry (2,1) is alpha + 2 - x
  CHECK(l2.entry(1, 0) == RatPoly({Rational(3, 4) + 2, Rational(-1)}));

  const StructParams p = rational_mu_params();
  const RatMatPoly l = laguerre_triangle(p);
  CHECK(l.derivative() == l * step_matrix(p));
  CHECK(l == RatMatPoly::constant(l.eval(0)) * nilpotent_exp<Rational>(step_matrix(p)));
}

TEST_CASE("closed-form inverse") {
  const StructParams p(4, Rational(3, 2),
                       {Rational(1), Rational(1), Rational(1), Rational(1)});
  const RatMatPoly l = laguerre_triangle(p);
  const RatMatPoly linv = laguerre_triangle_inverse(p);
  CHECK(linv * l == RatMatPoly::identity(4));
  CHECK(l * linv == RatMatPoly::identity(4));
  CHECK(linv == unipotent_inverse(l));

  const StructParams q = rational_mu_params();
  CHECK(laguerre_triangle_inverse(q) == unipotent_inverse(laguerre_triangle(q)));
}

TEST_CASE("parameter connection matrix") {
  const StructParams p = rational_mu_params();
  SUBCASE("equal parameters give the identity") {
    CHECK(matrices_equal<Rational>(parameter_connection(Rational(2), Rational(2), p),
                                   RatMatrix::Identity(4, 4)));
  }
  SUBCASE("two-by-two closed form") {
    const StructParams p2(2, Rational(1), {Rational(1), Rational(1)});
    const Rational alpha(9, 4), lambda(1, 3);
    RatMatrix expected = RatMatrix::Identity(2, 2);
    expected(1, 0) = alpha - lambda;
    CHECK(matrices_equal<Rational>(parameter_connection(alpha, lambda, p2), expected));
  }
  SUBCASE("three characterizations agree") {
    const Rational alpha(5, 2), lambda(7, 3);
    const RatMatrix m = parameter_connection(alpha, lambda, p);
    CHECK(matrices_equal<Rational>(m, parameter_connection_from_zero_values(alpha, lambda, p)));
    CHECK(matrices_equal<Rational>(m, parameter_connection_binomial(alpha, lambda, p)));
  }
  SUBCASE("inverse pair and cocycle") {
    const Rational a(5, 2), l(4), k(1, 2);
    CHECK(matrices_equal<Rational>(
        (parameter_connection(a, l, p) * parameter_connection(l, a, p)).eval(),
        RatMatrix::Identity(4, 4)));
    CHECK(matrices_equal<Rational>(
        (parameter_connection(a, l, p) * parameter_connection(l, k, p)).eval(),
        parameter_connection(a, k, p)));
  }
}

TEST_CASE("commutation relations") {
  CHECK(check_commutations(StructParams::unit(1, Rational(2))).all_pass());
  CHECK(check_commutations(StructParams(2, Rational(1), {Rational(1), Rational(1)}))
            .all_pass());
  // size-4 canonical representative with a half-integer parameter
  CHECK(check_commutations(StructParams::unit(4, Rational(5, 2))).all_pass());
  CHECK(check_commutations(rational_mu_params()).all_pass());
}

TEST_CASE("bracket identity [A, L] = A L A") {
  const StructParams p = rational_mu_params();
  const RatMatPoly l = laguerre_triangle(p);
  const RatMatPoly a = RatMatPoly::constant(step_matrix(p));
  CHECK(a * l - l * a == a * l * a);
}
