#include <doctest.h>

#include "mvlag/family.hpp"

using namespace mvlag;

TEST_CASE("family construction and validation") {
  SUBCASE("size one is valid for any positive c/d") {
    const FamilySpec f = make_family(1, Rational(2), Rational(1), {Rational(1)},
                                     Rational(5, 3), {Rational(2)}, 4);
    CHECK(f.delta(0) == std::vector<Rational>{Rational(1)});
    CHECK(f.c(0) == Rational(10, 3));  // d * (c/d)
  }
  SUBCASE("example-1 shape at size two satisfies the compatibility condition") {
    // mu^2 = (2, 2), c/d = nu = 1, d = 1
    const FamilySpec f = make_family(2, Rational(1), Rational(1), {Rational(2), Rational(2)},
                                     Rational(1), {Rational(1)}, 3);
    // canonical delta: (1, (1+1)_1/(1! (1)_1)) = (1, 2)
    CHECK(f.delta(0) == std::vector<Rational>{Rational(1), Rational(2)});
  }
  SUBCASE("inconsistent explicit delta is rejected") {
    // the per-level closed form delta_k ~ (nu+1)_{k-1} fails for example-1 mu
    const Rational nu(1);
    std::vector<Rational> mu2{Rational(3), Rational(6), Rational(6)};
    std::vector<Rational> printed{Rational(1), nu + 1, (nu + 1) * (nu + 2)};
    CHECK_THROWS_AS(make_family(3, nu, nu, mu2, nu, {Rational(1)}, 3, printed),
                    std::invalid_argument);
  }
  SUBCASE("negative parameters are rejected") {
    CHECK_THROWS(make_family(2, Rational(1), Rational(-1), {Rational(1), Rational(1)},
                             Rational(1), {Rational(1)}, 2));
    CHECK_THROWS(make_family(2, Rational(1), Rational(1), {Rational(1), Rational(-1)},
                             Rational(1), {Rational(1)}, 2));
  }
}

TEST_CASE("built-in families") {
  SUBCASE("example 1 flags the closed-form discrepancy and validates") {
    const FamilySpec f = example1(3, Rational(2), Rational(1), 4);
    CHECK(!f.notes.empty());
    CHECK(f.mu_squared == std::vector<Rational>{Rational(3), Rational(6), Rational(6)});
    CHECK(detect_rho(f) == Rational(0));
  }
  SUBCASE("example 2 stores c = nu*lambda, d = lambda") {
    const Rational lambda(3);
    const FamilySpec f = example2(2, Rational(1), Rational(1), lambda, 4);
    CHECK(f.c(0) == Rational(3));
    CHECK(f.d(0) == lambda);
    CHECK(f.mu_squared == std::vector<Rational>{Rational(1), Rational(1)});
    // canonical base delta (1, nu+1)
    CHECK(f.delta(0) == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(detect_rho(f) == Rational(0));
  }
  SUBCASE("example 3 stores c = C + nu*rho and the iterated delta") {
    const FamilySpec f = example3(3, Rational(1), Rational(1), Rational(1), Rational(0), 4);
    CHECK(f.c(0) == Rational(1));
    const auto& delta = f.delta(0);
    // (1+nu)_{k-1}/((k-1)!(N-k+1)_{k-1})
    CHECK(delta[0] == Rational(1));
    CHECK(delta[1] == Rational(1));     // (2)_1/(1! * (2)_1) = 1
    CHECK(delta[2] == Rational(3, 2));  // (2)_2/(2! * (1)_2) = 6/(2*2)
    CHECK(detect_rho(f) == Rational(0));

    const FamilySpec g = example3(2, Rational(1), Rational(1), Rational(2), Rational(3), 4);
    CHECK(detect_rho(g) == Rational(3, 2));
  }
}

TEST_CASE("pearson coefficients") {
  SUBCASE("scalar phi and psi") {
    const FamilySpec f = example2(1, Rational(2), Rational(1), Rational(1), 3);
    const Rational cd = f.c(0) + f.d(0);  // (c + d)
    CHECK(pearson_phi(f, 0) == RatMatPoly::monomial((cd * RatMatrix::Identity(1, 1)).eval(), 1));
    const RatMatPoly psi = pearson_psi(f, 0);
    CHECK(psi.coeff(1)(0, 0) == -cd);
    CHECK(psi.coeff(0)(0, 0) == cd * (f.nu + 2));
  }
  SUBCASE("leading coefficient of phi is nilpotent of the conjugated step form") {
    const FamilySpec f = example3(3, Rational(5, 2), Rational(1), Rational(1), Rational(1), 3);
    const RatMatrix lc = pearson_phi(f, 0).coeff(2);
    const RatMatrix l0t = laguerre_triangle_at_zero(f.params).transpose();
    const RatMatrix expected =
        (exact_inverse<Rational>(l0t) * (-f.d(0) * step_matrix(f.params).transpose()) * l0t)
            .eval();
    CHECK(matrices_equal<Rational>(lc, expected));
    RatMatrix sq = (lc * lc * lc).eval();
    CHECK(is_zero_matrix<Rational>(sq));
  }
  SUBCASE("psi constant term carries the delta-conjugated step matrix") {
    const FamilySpec f = example2(3, Rational(2), Rational(3, 2), Rational(2), 3);
    const RatMatrix l0t = laguerre_triangle_at_zero(f.params).transpose();
    const RatMatrix inner =
        (l0t * pearson_psi(f, 0).coeff(0) * exact_inverse<Rational>(l0t)).eval();
    const RatMatrix j = index_matrix(3);
    const RatMatrix id = RatMatrix::Identity(3, 3);
    const RatMatrix bulk =
        (((f.nu + 1) * id + j) * (f.d(0) * j + f.c(0) * id)).eval();
    const RatMatrix rest = (inner - bulk).eval();
    // remaining part is (Delta^{(nu)})^{-1} A Delta^{(nu+1)}
    for (int k = 2; k <= 3; ++k)
      CHECK(at1(rest, k, k - 1) == -f.delta(1)[k - 2] / f.delta(0)[k - 1]);
  }
  SUBCASE("pearson equations hold for the built-ins") {
    CHECK(verify_pearson(example2(1, Rational(1), Rational(1), Rational(1), 2), 0).all_pass());
    CHECK(verify_pearson(example1(2, Rational(1), Rational(1), 2), 0).all_pass());
    CHECK(verify_pearson(example2(4, Rational(3, 2), Rational(3, 2), Rational(1), 2), 0)
              .all_pass());
    CHECK(verify_pearson(example3(3, Rational(2), Rational(2), Rational(1), Rational(1), 3), 1)
              .all_pass());
  }
}

TEST_CASE("raising constants") {
  SUBCASE("scalar value is -(c+d)") {
    const FamilySpec f = example2(1, Rational(1), Rational(1), Rational(2), 3);
    CHECK(raising_constant(f, 3, 0)(0, 0) == -(f.c(0) + f.d(0)));
  }
  SUBCASE("conjugated diagonal entries are d(j-N-1)-c") {
    const FamilySpec f = example3(4, Rational(2), Rational(1), Rational(1), Rational(1), 3);
    const RatMatrix l0 = laguerre_triangle_at_zero(f.params);
    const RatMatrix core =
        (exact_inverse<Rational>(l0) * raising_constant(f, 2, 0) * l0).eval();
    for (int j = 1; j <= 4; ++j)
      CHECK(at1(core, j, j) == f.d(0) * Rational(j - 5) - f.c(0));
  }
  SUBCASE("index shift changes K by the c-level drift, not nothing") {
    // With constant d the true relation is
    //   K_{n-j}^{(nu+j)} = K_n^{(nu)} - (c^{(nu+j)} - c^{(nu)}) I;
    // the drift term vanishes only if c is level-independent, which the
    // delta positivity rules out for these families.
    const FamilySpec f = example2(3, Rational(2), Rational(1), Rational(1), 6);
    const int n = 3;
    for (int j = 1; j <= n; ++j) {
      const RatMatrix shifted = raising_constant(f, n - j, j);
      const RatMatrix base = raising_constant(f, n, 0);
      const RatMatrix drift =
          ((f.c(j) - f.c(0)) * RatMatrix::Identity(3, 3)).eval();
      CHECK(matrices_equal<Rational>(shifted, (base - drift).eval()));
      CHECK(!matrices_equal<Rational>(shifted, base));
    }
  }
}
