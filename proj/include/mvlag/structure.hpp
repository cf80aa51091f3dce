/*
 * Copyright 2026 The mvlag Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MVLAG_STRUCTURE_HPP
#define MVLAG_STRUCTURE_HPP

#include <stdexcept>
#include <vector>

#include "mvlag/laguerre.hpp"
#include "mvlag/matpoly.hpp"
#include "mvlag/report.hpp"

namespace mvlag {

// Parameters of the triangular structure: size N, Laguerre parameter alpha,
// and the diagonal scaling sequence mu (all nonzero rationals).
struct StructParams {
  int N = 1;
  Rational alpha = 1;
  std::vector<Rational> mu;

  StructParams(int n, Rational a, std::vector<Rational> m)
      : N(n), alpha(std::move(a)), mu(std::move(m)) {
    if (N < 1) throw std::invalid_argument("StructParams: N must be positive");
    if (!(alpha > 0)) throw std::invalid_argument("StructParams: alpha must be positive");
    if (static_cast<int>(mu.size()) != N)
      throw std::invalid_argument("StructParams: mu must have N entries");
    for (const auto& m_k : mu)
      if (m_k == 0) throw std::invalid_argument("StructParams: mu entries must be nonzero");
  }

  static StructParams unit(int n, Rational a) {
    return StructParams(n, std::move(a), std::vector<Rational>(n, Rational(1)));
  }
};

inline RatMatrix scale_matrix(const StructParams& p) {
  RatMatrix s = RatMatrix::Zero(p.N, p.N);
  for (int k = 1; k <= p.N; ++k) at1(s, k, k) = p.mu[k - 1];
  return s;
}

// Nilpotent step matrix with (k, k-1) entry -mu_k/mu_{k-1}; everything is a
// diagonal conjugate of the mu = 1 case.
inline RatMatrix step_matrix(const StructParams& p) {
  RatMatrix a = RatMatrix::Zero(p.N, p.N);
  for (int k = 2; k <= p.N; ++k) at1(a, k, k - 1) = -p.mu[k - 1] / p.mu[k - 2];
  return a;
}

// diag(1, 2, ..., N)
inline RatMatrix index_matrix(int n) {
  RatMatrix j = RatMatrix::Zero(n, n);
  for (int k = 1; k <= n; ++k) at1(j, k, k) = k;
  return j;
}

// (1 + A)^{-1} for nilpotent A via the terminating Neumann series.
inline RatMatrix inverse_identity_plus_nilpotent(const RatMatrix& a) {
  const int n = static_cast<int>(a.rows());
  RatMatrix sum = RatMatrix::Identity(n, n);
  RatMatrix power = RatMatrix::Identity(n, n);
  for (int k = 1; k < n; ++k) {
    power = (power * (-a)).eval();
    sum += power;
  }
  if (!is_zero_matrix<Rational>((power * a).eval()))
    throw std::invalid_argument("inverse_identity_plus_nilpotent: matrix is not nilpotent");
  return sum;
}

// Unipotent lower triangular matrix with (m, n) entry
// (mu_m/mu_n) L_{m-n}^{(alpha+n)}(x).
inline RatMatPoly laguerre_triangle(const StructParams& p) {
  const int n = p.N;
  std::vector<std::vector<RatPoly>> e(n, std::vector<RatPoly>(n));
  int deg = 0;
  for (int m = 1; m <= n; ++m)
    for (int c = 1; c <= m; ++c) {
      e[m - 1][c - 1] = (p.mu[m - 1] / p.mu[c - 1]) * laguerre(m - c, p.alpha + c);
      deg = std::max(deg, m - c);
    }
  std::vector<RatMatrix> coeffs(deg + 1, RatMatrix::Zero(n, n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c)
      for (int i = 0; i <= e[r][c].degree(); ++i) coeffs[i](r, c) = e[r][c].coeff(i);
  return RatMatPoly(n, std::move(coeffs));
}

// Closed form of the inverse: (m, n) entry (mu_m/mu_n) L_{m-n}^{(-alpha-m-1)}(-x).
inline RatMatPoly laguerre_triangle_inverse(const StructParams& p) {
  const int n = p.N;
  std::vector<std::vector<RatPoly>> e(n, std::vector<RatPoly>(n));
  int deg = 0;
  for (int m = 1; m <= n; ++m)
    for (int c = 1; c <= m; ++c) {
      e[m - 1][c - 1] = (p.mu[m - 1] / p.mu[c - 1]) *
                        laguerre(m - c, -p.alpha - m - 1).scaled_argument(Rational(-1));
      deg = std::max(deg, m - c);
    }
  std::vector<RatMatrix> coeffs(deg + 1, RatMatrix::Zero(n, n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c)
      for (int i = 0; i <= e[r][c].degree(); ++i) coeffs[i](r, c) = e[r][c].coeff(i);
  return RatMatPoly(n, std::move(coeffs));
}

inline RatMatrix laguerre_triangle_at_zero(const StructParams& p) {
  return laguerre_triangle(p).eval(0);
}

// Connection matrix between triangles with parameters alpha and lambda,
// sum_{k<N} (alpha-lambda)_k/k! (-1)^k A^k.
inline RatMatrix parameter_connection(const Rational& alpha, const Rational& lambda,
                                      const StructParams& p) {
  const RatMatrix a = step_matrix(p);
  RatMatrix sum = RatMatrix::Zero(p.N, p.N);
  RatMatrix power = RatMatrix::Identity(p.N, p.N);
  for (int k = 0; k < p.N; ++k) {
    Rational c = pochhammer(alpha - lambda, k) / factorial(k);
    if (k % 2 == 1) c = -c;
    sum += c * power;
    power = (power * a).eval();
  }
  return sum;
}

// Same matrix as the quotient of triangles at zero.
inline RatMatrix parameter_connection_from_zero_values(const Rational& alpha,
                                                       const Rational& lambda,
                                                       const StructParams& p) {
  StructParams pa(p.N, alpha, p.mu);
  StructParams pl(p.N, lambda, p.mu);
  const RatMatrix la = laguerre_triangle_at_zero(pa);
  const RatMatrix ll = laguerre_triangle_at_zero(pl);
  return la * exact_inverse<Rational>(ll);
}

// Same matrix as (1+A)^{lambda-alpha} through the terminating binomial series.
inline RatMatrix parameter_connection_binomial(const Rational& alpha, const Rational& lambda,
                                               const StructParams& p) {
  const RatMatrix a = step_matrix(p);
  RatMatrix sum = RatMatrix::Zero(p.N, p.N);
  RatMatrix power = RatMatrix::Identity(p.N, p.N);
  for (int k = 0; k < p.N; ++k) {
    sum += binomial(lambda - alpha, k) * power;
    power = (power * a).eval();
  }
  return sum;
}

// The three commutation relations between L, J and A, checked as exact
// polynomial identities.
inline Report check_commutations(const StructParams& p) {
  Report rep;
  const int n = p.N;
  const RatMatrix a = step_matrix(p);
  const RatMatrix j = index_matrix(n);
  const RatMatrix inv1a = inverse_identity_plus_nilpotent(a);
  const RatMatPoly l = laguerre_triangle(p);
  const RatMatPoly linv = laguerre_triangle_inverse(p);
  const RatMatPoly x = RatMatPoly::variable(n);
  const RatMatrix id = RatMatrix::Identity(n, n);

  {
    const RatMatPoly lhs = l * j * linv;
    const RatMatPoly rhs =
        x * inv1a - x + RatMatPoly::constant(((p.alpha * id + j) * a + j).eval());
    rep.add("commutation.LJLinv", "conjugation of the index matrix by the triangle",
            lhs == rhs);
  }
  {
    const RatMatPoly lhs = linv * j * l;
    const RatMatPoly rhs = RatMatPoly::constant(j) -
                           (RatMatPoly::constant((p.alpha * id + j).eval()) - x) * a -
                           x * RatMatPoly::constant((a * a).eval());
    rep.add("commutation.LinvJL", "reverse conjugation of the index matrix",
            lhs == rhs);
  }
  {
    const RatMatPoly lhs = l * RatMatPoly::constant((id - a).eval()) * linv;
    const RatMatPoly rhs = RatMatPoly::constant(inv1a);
    rep.add("commutation.step", "conjugation of 1-A onto the inverse of 1+A",
            lhs == rhs);
  }
  return rep;
}

}  // namespace mvlag

#endif  // MVLAG_STRUCTURE_HPP
