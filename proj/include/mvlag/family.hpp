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

#ifndef MVLAG_FAMILY_HPP
#define MVLAG_FAMILY_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvlag/report.hpp"
#include "mvlag/weight.hpp"

namespace mvlag {

// A parameter family of weights W^{(alpha, nu+j)} for integer levels
// j = 0..max_shift, satisfying the two compatibility conditions
//   delta_k^{(nu+1)} = (k d^{(nu)} + c^{(nu)}) delta_k^{(nu)}
//   mu_{k+1}^2/mu_k^2 = d^{(nu)} k (N-k) delta_{k+1}^{(nu)}/delta_k^{(nu+1)}
// at every level.
//
// The sequence mu enters all matrix quantities only through the diagonal
// conjugation S_mu, and the true mu_k (square roots of the stored squares)
// are in general irrational.  Exact computation therefore runs in the
// canonical frame mu = 1 with delta replaced by delta_k/mu_k^2; `mu_squared`
// keeps the caller's data for validation.  Matrix quantities for the original
// mu are the diagonal conjugates of the canonical ones.
struct FamilySpec {
  int N = 1;
  Rational alpha = 1;
  Rational nu = 1;
  std::vector<Rational> mu_squared;
  StructParams params = StructParams::unit(1, 1);  // canonical frame
  int max_shift = 0;
  std::vector<Rational> c_levels;                  // c^{(nu+j)}, j = 0..max_shift
  std::vector<Rational> d_levels;                  // d^{(nu+j)}, j = 0..max_shift
  std::vector<std::vector<Rational>> delta_levels; // canonical, j = 0..max_shift+1
  std::vector<std::string> notes;

  const std::vector<Rational>& delta(int level) const {
    if (level < 0 || level >= static_cast<int>(delta_levels.size()))
      throw std::out_of_range("FamilySpec: level exceeds max_shift");
    return delta_levels[level];
  }
  const Rational& c(int level) const {
    if (level < 0 || level >= static_cast<int>(c_levels.size()))
      throw std::out_of_range("FamilySpec: level exceeds max_shift");
    return c_levels[level];
  }
  const Rational& d(int level) const {
    if (level < 0 || level >= static_cast<int>(d_levels.size()))
      throw std::out_of_range("FamilySpec: level exceeds max_shift");
    return d_levels[level];
  }
};

// Constructs a family from the iterated product solution
//   delta_k/mu_k^2 = (1+g)_{k-1}/((k-1)!(N-k+1)_{k-1}),  g = c/d at the base,
// or from an explicitly supplied base delta (absolute, in the caller's
// frame).  Higher levels follow the delta recursion with
// c^{(nu+j)} = d^{(nu+j)} (g + j); every family invariant is then validated
// and violations throw.
inline FamilySpec make_family(int N, Rational alpha, Rational nu,
                              std::vector<Rational> mu_squared, Rational c_over_d,
                              std::vector<Rational> d_levels, int max_shift,
                              std::optional<std::vector<Rational>> delta_base = std::nullopt) {
  if (N < 1) throw std::invalid_argument("make_family: N must be positive");
  if (!(alpha > 0)) throw std::invalid_argument("make_family: alpha must be positive");
  if (!(nu > 0)) throw std::invalid_argument("make_family: nu must be positive");
  if (max_shift < 0) throw std::invalid_argument("make_family: negative max_shift");
  if (static_cast<int>(mu_squared.size()) != N)
    throw std::invalid_argument("make_family: mu_squared must have N entries");
  for (const auto& m : mu_squared)
    if (!(m > 0)) throw std::invalid_argument("make_family: mu_squared entries must be positive");
  if (c_over_d < 0) throw std::invalid_argument("make_family: c/d must be nonnegative");
  if (d_levels.empty()) throw std::invalid_argument("make_family: need at least one d level");
  while (static_cast<int>(d_levels.size()) < max_shift + 1) d_levels.push_back(d_levels.back());
  d_levels.resize(max_shift + 1);
  for (const auto& d : d_levels)
    if (!(d > 0)) throw std::invalid_argument("make_family: d levels must be positive");

  FamilySpec f;
  f.N = N;
  f.alpha = alpha;
  f.nu = nu;
  f.mu_squared = mu_squared;
  f.params = StructParams::unit(N, alpha);
  f.max_shift = max_shift;
  f.d_levels = d_levels;
  f.c_levels.resize(max_shift + 1);
  for (int j = 0; j <= max_shift; ++j) f.c_levels[j] = d_levels[j] * (c_over_d + j);
  if (f.c_levels[0] < 0)
    throw std::invalid_argument("make_family: c levels must be nonnegative");

  // Base delta in the canonical frame.
  std::vector<Rational> base(N);
  if (delta_base) {
    if (static_cast<int>(delta_base->size()) != N)
      throw std::invalid_argument("make_family: delta must have N entries");
    for (int k = 1; k <= N; ++k) {
      if (!((*delta_base)[k - 1] > 0))
        throw std::invalid_argument("make_family: delta entries must be positive");
      base[k - 1] = (*delta_base)[k - 1] * mu_squared[0] / mu_squared[k - 1];
    }
  } else {
    for (int k = 1; k <= N; ++k)
      base[k - 1] = pochhammer(1 + c_over_d, k - 1) /
                    (factorial(k - 1) * pochhammer(Rational(N - k + 1), k - 1));
  }

  f.delta_levels.resize(max_shift + 2);
  f.delta_levels[0] = std::move(base);
  for (int j = 0; j <= max_shift; ++j) {
    f.delta_levels[j + 1].resize(N);
    for (int k = 1; k <= N; ++k)
      f.delta_levels[j + 1][k - 1] =
          (Rational(k) * f.d_levels[j] + f.c_levels[j]) * f.delta_levels[j][k - 1];
  }

  // Validate the mu-delta compatibility condition at every level; it is
  // invariant under the canonical-frame rescaling, so checking it on the
  // canonical delta checks the caller's data.
  for (int j = 0; j <= max_shift; ++j) {
    for (int k = 1; k <= N - 1; ++k) {
      const Rational lhs = 1;  // canonical frame: all mu ratios are 1
      const Rational rhs = f.d_levels[j] * Rational(k * (N - k)) *
                           f.delta_levels[j][k] / f.delta_levels[j + 1][k - 1];
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "make_family: mu-delta compatibility fails at level " << j
            << ", k = " << k << " (mu_{k+1}^2/mu_k^2 = "
            << to_string(mu_squared[k] / mu_squared[k - 1]) << ", required "
            << to_string(rhs * mu_squared[k] / mu_squared[k - 1]) << ")";
        throw std::invalid_argument(msg.str());
      }
    }
    for (int k = 0; k < N; ++k)
      if (!(f.delta_levels[j][k] > 0))
        throw std::invalid_argument("make_family: derived delta must stay positive");
  }
  return f;
}

// mu_k^2 = (N-k+1)_k.  The per-level closed form printed for this family in
// the classical references fails the mu-delta compatibility condition; the
// iterated-product construction is used instead and the discrepancy noted.
inline FamilySpec example1(int N, Rational alpha, Rational nu, int max_shift) {
  std::vector<Rational> mu2(N);
  for (int k = 1; k <= N; ++k) mu2[k - 1] = pochhammer(Rational(N - k + 1), k);
  FamilySpec f = make_family(N, std::move(alpha), nu, std::move(mu2), nu,
                             {Rational(1)}, max_shift);
  f.notes.push_back(
      "example 1: the closed form delta_k = Gamma(nu)(nu)_k is inconsistent with "
      "mu_k^2 = (N-k+1)_k (fails the mu-delta compatibility condition for N >= 2, "
      "k >= 2); delta is constructed from the iterated product instead, giving "
      "delta_k proportional to (1+nu)_{k-1}/(k-1)!.");
  return f;
}

// mu_k^2 = (k-1)!(N-k+1)_{k-1}, c = nu*lambda, d = lambda.
inline FamilySpec example2(int N, Rational alpha, Rational nu, const Rational& lambda,
                           int max_shift) {
  if (!(lambda > 0)) throw std::invalid_argument("example2: lambda must be positive");
  std::vector<Rational> mu2(N);
  for (int k = 1; k <= N; ++k)
    mu2[k - 1] = factorial(k - 1) * pochhammer(Rational(N - k + 1), k - 1);
  return make_family(N, std::move(alpha), nu, std::move(mu2), nu, {lambda}, max_shift);
}

// mu_k = 1, c = C + nu*rho, d = rho.
inline FamilySpec example3(int N, Rational alpha, Rational nu, const Rational& rho,
                           const Rational& C, int max_shift) {
  if (!(rho > 0)) throw std::invalid_argument("example3: rho must be positive");
  if (C < 0) throw std::invalid_argument("example3: C must be nonnegative");
  std::vector<Rational> mu2(N, Rational(1));
  return make_family(N, std::move(alpha), nu, std::move(mu2), nu + C / rho, {rho},
                     max_shift);
}

// The constant rho with c^{(nu+j)}/d^{(nu+j)} = (nu+j) + rho, when the family
// has one; detected from the stored levels, never assumed.
inline std::optional<Rational> detect_rho(const FamilySpec& f) {
  if (f.c_levels.empty()) return std::nullopt;
  const Rational rho = f.c_levels[0] / f.d_levels[0] - f.nu;
  for (int j = 1; j <= f.max_shift; ++j)
    if (f.c_levels[j] / f.d_levels[j] - (f.nu + j) != rho) return std::nullopt;
  return rho;
}

inline WeightForm weight_at_level(const FamilySpec& f, int level) {
  return make_weight(f.params, f.nu + level, f.delta(level));
}

// Degree-two Pearson coefficient: (L(0)^T)^{-1}(-d x^2 A^T + x(dJ + c))L(0)^T.
inline RatMatPoly pearson_phi(const FamilySpec& f, int level) {
  const int n = f.N;
  const RatMatrix a_t = step_matrix(f.params).transpose();
  const RatMatrix j = index_matrix(n);
  const RatMatrix l0_t = laguerre_triangle_at_zero(f.params).transpose();
  const RatMatrix l0_t_inv = exact_inverse<Rational>(l0_t);
  const Rational& c = f.c(level);
  const Rational& d = f.d(level);
  const RatMatrix id = RatMatrix::Identity(n, n);

  RatMatPoly inner = RatMatPoly::monomial((-d * a_t).eval(), 2) +
                     RatMatPoly::monomial((d * j + c * id).eval(), 1);
  return l0_t_inv * inner * l0_t;
}

// Degree-one Pearson coefficient, conjugated the same way.
inline RatMatPoly pearson_psi(const FamilySpec& f, int level) {
  const int n = f.N;
  const RatMatrix a = step_matrix(f.params);
  const RatMatrix a_t = a.transpose();
  const RatMatrix j = index_matrix(n);
  const RatMatrix l0_t = laguerre_triangle_at_zero(f.params).transpose();
  const RatMatrix l0_t_inv = exact_inverse<Rational>(l0_t);
  const Rational& c = f.c(level);
  const Rational& d = f.d(level);
  const Rational nu_level = f.nu + level;
  const RatMatrix id = RatMatrix::Identity(n, n);

  RatMatrix delta_inv_a_delta = RatMatrix::Zero(n, n);
  {
    const auto& lo = f.delta(level);
    const auto& hi = f.delta(level + 1);
    for (int k = 2; k <= n; ++k)
      at1(delta_inv_a_delta, k, k - 1) = -hi[k - 2] / lo[k - 1];
  }

  const RatMatrix linear =
      (d * (j - a_t * (j + (nu_level + 1) * id) - Rational(n + 1) * id) - c * id).eval();
  const RatMatrix constant =
      (((nu_level + 1) * id + j) * (d * j + c * id) + delta_inv_a_delta).eval();

  RatMatPoly inner = RatMatPoly::monomial(linear, 1) + RatMatPoly::constant(constant);
  return l0_t_inv * inner * l0_t;
}

// Raising constant K_n at the given level:
// L(0) (d(J - (J+nu+level+n)A - N - 1) - c) L(0)^{-1}.
inline RatMatrix raising_constant(const FamilySpec& f, int n_deg, int level) {
  const int n = f.N;
  const RatMatrix a = step_matrix(f.params);
  const RatMatrix j = index_matrix(n);
  const RatMatrix l0 = laguerre_triangle_at_zero(f.params);
  const Rational& c = f.c(level);
  const Rational& d = f.d(level);
  const RatMatrix id = RatMatrix::Identity(n, n);
  const RatMatrix core =
      (d * (j - (j + (f.nu + level + n_deg) * id) * a - Rational(n + 1) * id) - c * id).eval();
  return l0 * core * exact_inverse<Rational>(l0);
}

// First-order raising operator built from the Pearson pair:
// Q -> Q' Phi^T + Q Psi^T.
inline RatMatPoly apply_raising(const FamilySpec& f, int level, const RatMatPoly& q) {
  return q.derivative() * pearson_phi(f, level).transpose_poly() +
         q * pearson_psi(f, level).transpose_poly();
}

// Checks the two Pearson equations on the exponential-stripped polynomial
// parts:  q Phi = x q1  and  q Psi = (nu+1) q1 + x q1' - x q1, together with
// the exact degrees of Phi and Psi.
inline Report verify_pearson(const FamilySpec& f, int level) {
  Report rep;
  const WeightForm w = weight_at_level(f, level);
  const WeightForm w1 = weight_at_level(f, level + 1);
  const RatMatPoly phi = pearson_phi(f, level);
  const RatMatPoly psi = pearson_psi(f, level);
  const RatMatPoly x = RatMatPoly::variable(f.N);
  const Rational nu_level = f.nu + level;

  rep.add("pearson.phi", "weight quotient equals the degree-two Pearson coefficient",
          w.q * phi == x * w1.q);
  const RatMatPoly stripped_derivative =
      (nu_level + 1) * w1.q + x * w1.q.derivative() - x * w1.q;
  rep.add("pearson.psi", "weight-derivative quotient equals the degree-one coefficient",
          w.q * psi == stripped_derivative);

  const int expected_phi_degree = f.N == 1 ? 1 : 2;
  rep.add("pearson.phi-degree",
          "degree of the second-order Pearson coefficient",
          phi.degree() == expected_phi_degree,
          f.N == 1 ? "size 1 collapses the quadratic term (step matrix is zero)" : "");
  rep.add("pearson.psi-degree", "degree of the first-order Pearson coefficient",
          psi.degree() == 1);

  bool diag_negative = true;
  const RatMatrix ktilde_diag = raising_constant(f, 1, level);
  // invertibility witness: conjugated diagonal entries d(j - N - 1) - c < 0
  for (int jj = 1; jj <= f.N; ++jj) {
    const Rational entry = f.d(level) * Rational(jj - f.N - 1) - f.c(level);
    if (!(entry < 0)) diag_negative = false;
  }
  rep.add("pearson.k-invertible", "raising constants have negative conjugated diagonal",
          diag_negative, ktilde_diag.rows() == f.N ? "" : "shape");
  return rep;
}

}  // namespace mvlag

#endif  // MVLAG_FAMILY_HPP
