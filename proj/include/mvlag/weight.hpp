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

#ifndef MVLAG_WEIGHT_HPP
#define MVLAG_WEIGHT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvlag/structure.hpp"

namespace mvlag {

// Matrix weight W(x) = e^{-x} x^nu q(x), with q the polynomial part coming
// from the triangular factorization q = L diag(delta_k x^k) L^T.
struct WeightForm {
  int N = 1;
  Rational nu = 1;
  RatMatPoly q = RatMatPoly::identity(1);
};

// A rational matrix that stands for `value * Gamma(base + 1)`.  All integrals
// over the half line are exact rationals in these units; quantities may only
// be compared after rebasing to a common base.
struct GammaUnits {
  Rational base;
  RatMatrix value;

  // Converts between bases differing by an integer, using
  // Gamma(b+1) = Gamma(t+1) * (t+1)_{b-t} for b >= t.
  GammaUnits rebased(const Rational& target) const {
    const Rational diff = base - target;
    if (!is_integer(diff))
      throw std::invalid_argument("GammaUnits: bases must differ by an integer");
    const long j = diff.get_num().get_si();
    GammaUnits out{target, value};
    if (j >= 0)
      out.value *= pochhammer(target + 1, static_cast<int>(j));
    else
      out.value /= pochhammer(base + 1, static_cast<int>(-j));
    return out;
  }
};

inline WeightForm make_weight(const StructParams& p, const Rational& nu,
                              const std::vector<Rational>& delta) {
  if (!(nu > 0)) throw std::invalid_argument("make_weight: nu must be positive");
  if (static_cast<int>(delta.size()) != p.N)
    throw std::invalid_argument("make_weight: delta must have N entries");
  for (const auto& d : delta)
    if (!(d > 0)) throw std::invalid_argument("make_weight: delta entries must be positive");

  RatMatPoly diag(p.N);
  for (int k = 1; k <= p.N; ++k) {
    RatMatrix e = RatMatrix::Zero(p.N, p.N);
    at1(e, k, k) = delta[k - 1];
    diag += RatMatPoly::monomial(std::move(e), k);
  }
  const RatMatPoly l = laguerre_triangle(p);
  return WeightForm{p.N, nu, l * diag * l.transpose_poly()};
}

// Integral of x^m W(x) over (0, infinity) in Gamma(nu+1) units, using
// the half-line moments of e^{-x} x^{nu+s}.
inline GammaUnits moment(const WeightForm& w, int m) {
  if (m < 0) throw std::invalid_argument("moment: negative order");
  RatMatrix acc = RatMatrix::Zero(w.N, w.N);
  for (int s = 0; s <= w.q.degree(); ++s)
    acc += w.q.coeff(s) * pochhammer(w.nu + 1, m + s);
  return GammaUnits{w.nu, std::move(acc)};
}

// Closed form of the zeroth moment when alpha == nu: diagonal with entries
// mu_j^2 (nu+1)_j/(j-1)! sum_{k<=j} (delta_k/mu_k^2)(-1)^{k+1}(-j+1)_{k-1},
// in Gamma(nu+1) units.
inline GammaUnits zeroth_moment_closed_form(const StructParams& p, const Rational& nu,
                                            const std::vector<Rational>& delta) {
  if (p.alpha != nu)
    throw std::invalid_argument("zeroth_moment_closed_form: requires alpha == nu");
  RatMatrix h = RatMatrix::Zero(p.N, p.N);
  for (int j = 1; j <= p.N; ++j) {
    Rational sum = 0;
    for (int k = 1; k <= j; ++k) {
      Rational term = delta[k - 1] / (p.mu[k - 1] * p.mu[k - 1]) *
                      pochhammer(Rational(-j + 1), k - 1);
      if (k % 2 == 0) term = -term;
      sum += term;
    }
    at1(h, j, j) = p.mu[j - 1] * p.mu[j - 1] * pochhammer(nu + 1, j) / factorial(j - 1) * sum;
  }
  return GammaUnits{nu, std::move(h)};
}

struct HypergeometricMomentResult {
  GammaUnits value{Rational(0), RatMatrix()};
  // Which Pochhammer base closed the terminating 2F1 sum: "-N+1" or "-N-1",
  // or "none" when neither reproduces the direct sum.
  std::string matched_denominator = "none";
  bool consistent = false;
};

// Evaluates the zeroth moment through the summed terminating hypergeometric
// series, for delta built from the iterated product
// delta_k/mu_k^2 = (1+g)_{k-1}/((k-1)!(N-k+1)_{k-1}), g = c/d.  Both
// candidate Pochhammer denominators are evaluated and compared against the
// direct closed-form sum; the matching one is recorded.
inline HypergeometricMomentResult zeroth_moment_hypergeometric(const StructParams& p,
                                                               const Rational& nu,
                                                               const Rational& c_over_d) {
  if (p.alpha != nu)
    throw std::invalid_argument("zeroth_moment_hypergeometric: requires alpha == nu");
  const int n = p.N;
  std::vector<Rational> delta(n);
  for (int k = 1; k <= n; ++k) {
    delta[k - 1] = p.mu[k - 1] * p.mu[k - 1] / (p.mu[0] * p.mu[0]) *
                   pochhammer(1 + c_over_d, k - 1) /
                   (factorial(k - 1) * pochhammer(Rational(n - k + 1), k - 1));
  }
  const GammaUnits direct = zeroth_moment_closed_form(p, nu, delta);

  auto candidate = [&](const Rational& base) {
    RatMatrix h = RatMatrix::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
      at1(h, j, j) = p.mu[j - 1] * p.mu[j - 1] / (p.mu[0] * p.mu[0]) *
                     pochhammer(nu + 1, j) * pochhammer(-Rational(n) - c_over_d, j - 1) /
                     (factorial(j - 1) * pochhammer(base, j - 1));
    }
    return h;
  };

  HypergeometricMomentResult out;
  const RatMatrix plus = candidate(Rational(-n + 1));
  const RatMatrix minus = candidate(Rational(-n - 1));
  if (matrices_equal<Rational>(plus, direct.value)) {
    out.value = GammaUnits{nu, plus};
    out.matched_denominator = "-N+1";
    out.consistent = true;
  } else if (matrices_equal<Rational>(minus, direct.value)) {
    out.value = GammaUnits{nu, minus};
    out.matched_denominator = "-N-1";
    out.consistent = true;
  } else {
    out.value = direct;
  }
  return out;
}

}  // namespace mvlag

#endif  // MVLAG_WEIGHT_HPP
