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

#ifndef MVLAG_LAGUERRE_HPP
#define MVLAG_LAGUERRE_HPP

#include <stdexcept>
#include <vector>

#include "mvlag/poly.hpp"
#include "mvlag/rational.hpp"

namespace mvlag {

// Classical Laguerre polynomial L_n^{(a)} with exact rational coefficients,
// computed by the three-term recurrence
//   (n+1) L_{n+1} = (2n+a+1-x) L_n - (n+a) L_{n-1}.
inline RatPoly laguerre(int n, const Rational& a) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  RatPoly prev;                                       // L_{-1} = 0
  RatPoly cur(1);                                     // L_0 = 1
  const RatPoly x = RatPoly::variable();
  for (int k = 0; k < n; ++k) {
    RatPoly next = (RatPoly(Rational(2 * k) + a + 1) - x) * cur - (Rational(k) + a) * prev;
    next *= Rational(1, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// d/dx L_n^{(a)} = -L_{n-1}^{(a+1)}, as an exact coefficient identity.
inline bool laguerre_derivative_check(int n, const Rational& a) {
  if (n < 1) throw std::invalid_argument("laguerre_derivative_check: n >= 1");
  return laguerre(n, a).derivative() == -laguerre(n - 1, a + 1);
}

// Sum_{k=j}^{i} L_{i-k}^{(-a-i-1)}(-x) L_{k-j}^{(a+j)}(x).  Evaluates to the
// constant polynomial delta_{i,j}; returned unevaluated so callers can check.
inline RatPoly laguerre_inversion_sum(int i, int j, const Rational& a) {
  if (i < j || j < 0) throw std::invalid_argument("laguerre_inversion_sum: need i >= j >= 0");
  RatPoly sum;
  for (int k = j; k <= i; ++k) {
    RatPoly left = laguerre(i - k, -a - i - 1).scaled_argument(Rational(-1));
    RatPoly right = laguerre(k - j, a + j);
    sum += left * right;
  }
  return sum;
}

// Connection coefficients c_k with L_n^{(a)} = sum_k c_k L_k^{(l)},
// c_k = (a-l)_{n-k}/(n-k)!.
inline std::vector<Rational> laguerre_parameter_shift(int n, const Rational& a,
                                                      const Rational& l) {
  if (n < 0) throw std::invalid_argument("laguerre_parameter_shift: negative degree");
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = pochhammer(a - l, n - k) / factorial(n - k);
  return c;
}

// Physicists' Hermite polynomial via H_{n+1} = 2x H_n - 2n H_{n-1}.
inline RatPoly hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  RatPoly prev;
  RatPoly cur(1);
  const RatPoly x = RatPoly::variable();
  for (int k = 0; k < n; ++k) {
    RatPoly next = Rational(2) * x * cur - Rational(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace mvlag

#endif  // MVLAG_LAGUERRE_HPP
