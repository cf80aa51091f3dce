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

#ifndef MVLAG_MVOP_HPP
#define MVLAG_MVOP_HPP

#include <stdexcept>
#include <vector>

#include "mvlag/family.hpp"

namespace mvlag {

// <P, Q> = integral of P W Q^T, expanded into exact moments of W.
// Returned in Gamma(w.nu + 1) units.
inline GammaUnits inner_product(const RatMatPoly& p, const RatMatPoly& q,
                                const WeightForm& w) {
  const RatMatPoly integrand = p * w.q * q.transpose_poly();
  RatMatrix acc = RatMatrix::Zero(w.N, w.N);
  for (int m = 0; m <= integrand.degree(); ++m)
    acc += integrand.coeff(m) * pochhammer(w.nu + 1, m);
  return GammaUnits{w.nu, std::move(acc)};
}

// The unique monic degree-n polynomial orthogonal to all lower degrees,
// found by solving the block Hankel system over the rationals.  This is the
// oracle generator the other two are checked against.
inline RatMatPoly monic_from_moments(const FamilySpec& f, int level, int n) {
  if (n < 0) throw std::invalid_argument("monic_from_moments: negative degree");
  const int size = f.N;
  if (n == 0) return RatMatPoly::identity(size);
  const WeightForm w = weight_at_level(f, level);

  std::vector<RatMatrix> mom(2 * n);
  for (int m = 0; m < 2 * n; ++m) mom[m] = moment(w, m).value;

  // Unknown A = [A_0 ... A_{n-1}] with sum_i A_i M_{i+j} = -M_{n+j}.
  RatMatrix hank(n * size, n * size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hank.block(i * size, j * size, size, size) = mom[i + j];
  RatMatrix rhs(n * size, size);
  for (int j = 0; j < n; ++j) rhs.block(j * size, 0, size, size) = -mom[n + j].transpose();

  // Row r of every A_i solves hank^T y = column of rhs; hank is block
  // symmetric so transposition only swaps the block off-diagonals.
  const RatMatrix sol = solve_unique<Rational>(hank.transpose(), rhs);

  std::vector<RatMatrix> coeffs(n + 1, RatMatrix::Zero(size, size));
  for (int i = 0; i < n; ++i) coeffs[i] = sol.block(i * size, 0, size, size).transpose();
  coeffs[n] = RatMatrix::Identity(size, size);
  return RatMatPoly(size, std::move(coeffs));
}

// Product of inverse raising constants
// (K_n^{(nu+level)})^{-1} (K_{n-1}^{(nu+level+1)})^{-1} ... (K_1^{(nu+level+n-1)})^{-1}.
// The factors genuinely differ between levels whenever c^{(nu)} depends on
// nu, so the product form is used throughout.
inline RatMatrix rodrigues_constant(const FamilySpec& f, int level, int n) {
  RatMatrix g = RatMatrix::Identity(f.N, f.N);
  for (int i = 0; i < n; ++i)
    g = (g * exact_inverse<Rational>(raising_constant(f, n - i, level + i))).eval();
  return g;
}

// n-th derivative of W at level (level + n), written as e^{-x} x^{nu+level} R
// with R polynomial; returns R.
inline RatMatPoly rodrigues_numerator(const FamilySpec& f, int level, int n) {
  const WeightForm top = weight_at_level(f, level + n);
  RatMatPoly r = top.q;
  const RatMatPoly x = RatMatPoly::variable(f.N);
  for (int i = 0; i < n; ++i) {
    const Rational s = top.nu - i;  // current exponent of the x power
    r = s * r + x * r.derivative() - x * r;
  }
  return r;
}

// Generates P_n by the derivative formula: solves P q = G R with the unique
// bounded-degree right division.  The weight's polynomial part is singular at
// the origin, so the quotient is taken as an exact linear solve rather than a
// rational-function division.
inline RatMatPoly monic_from_rodrigues(const FamilySpec& f, int level, int n) {
  if (n < 0) throw std::invalid_argument("monic_from_rodrigues: negative degree");
  if (n == 0) return RatMatPoly::identity(f.N);
  const WeightForm base = weight_at_level(f, level);
  const RatMatPoly r = rodrigues_numerator(f, level, n);
  const RatMatrix g = rodrigues_constant(f, level, n);
  return solve_right_linear<Rational>(base.q, g * r, n);
}

// Squared norm from the closed form H_n = (-1)^n n! G_n H_0^{(alpha, nu+n)},
// expressed in Gamma(nu + level + 1) units.
inline GammaUnits squared_norm(const FamilySpec& f, int level, int n) {
  const RatMatrix g = rodrigues_constant(f, level, n);
  const GammaUnits h0_top = moment(weight_at_level(f, level + n), 0);
  RatMatrix value = factorial(n) * g * h0_top.rebased(f.nu + level).value;
  if (n % 2 == 1) value = -value;
  return GammaUnits{f.nu + level, std::move(value)};
}

// One-but-leading coefficient X_n = n (K_1^{(nu+level+n-1)})^{-1} Psi^{(nu+level+n-1)}(0)^T.
inline RatMatrix subleading_coefficient(const FamilySpec& f, int level, int n) {
  if (n == 0) return RatMatrix::Zero(f.N, f.N);
  const RatMatrix k1 = raising_constant(f, 1, level + n - 1);
  const RatMatrix psi0 = pearson_psi(f, level + n - 1).coeff(0).transpose();
  return Rational(n) * exact_inverse<Rational>(k1) * psi0;
}

inline RatMatrix recurrence_b(const FamilySpec& f, int level, int n) {
  return subleading_coefficient(f, level, n) - subleading_coefficient(f, level, n + 1);
}

// C_n = H_n H_{n-1}^{-1} with both norms from the closed form.
inline RatMatrix recurrence_c(const FamilySpec& f, int level, int n) {
  if (n < 1) throw std::invalid_argument("recurrence_c: n must be at least 1");
  const GammaUnits hn = squared_norm(f, level, n);
  const GammaUnits hm = squared_norm(f, level, n - 1);
  return hn.value * exact_inverse<Rational>(hm.value);
}

// P_0..P_n through the three-term recurrence with the closed-form B_j, C_j:
// P_{j+1} = (x - B_j) P_j - C_j P_{j-1}.
inline std::vector<RatMatPoly> monic_from_recurrence(const FamilySpec& f, int level, int n) {
  if (n < 0) throw std::invalid_argument("monic_from_recurrence: negative degree");
  std::vector<RatMatPoly> p;
  p.reserve(n + 1);
  p.push_back(RatMatPoly::identity(f.N));
  const RatMatPoly x = RatMatPoly::variable(f.N);
  for (int j = 0; j < n; ++j) {
    RatMatPoly next = x * p[j] - recurrence_b(f, level, j) * p[j];
    if (j > 0) next -= recurrence_c(f, level, j) * p[j - 1];
    p.push_back(std::move(next));
  }
  return p;
}

// Lowering and raising shift relations:
//   d/dx P_n at level nu equals n P_{n-1} at level nu+1, and
//   applying the raising operator to P_{n-1}^{(nu+1)} gives K_n P_n^{(nu)}.
inline Report derivative_shift_check(const FamilySpec& f, int level, int n) {
  Report rep;
  const RatMatPoly pn = monic_from_moments(f, level, n);
  const RatMatPoly pm = monic_from_moments(f, level + 1, n - 1);
  rep.add("shift.lowering", "derivative lowers the degree and raises the level",
          pn.derivative() == Rational(n) * pm);
  const RatMatPoly raised = apply_raising(f, level, pm);
  rep.add("shift.raising", "raising operator maps level nu+1 back to level nu",
          raised == raising_constant(f, n, level) * pn);
  return rep;
}

}  // namespace mvlag

#endif  // MVLAG_MVOP_HPP
