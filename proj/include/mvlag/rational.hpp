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

#ifndef MVLAG_RATIONAL_HPP
#define MVLAG_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvlag {

// Base field of the exact engine: arbitrary-precision rationals, kept in
// lowest terms with positive denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatMatrix = DenseMatrix<Rational>;

// Parses "p", "-p" or "p/q" in base 10.
inline Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Shifted factorial x(x+1)...(x+k-1); empty product is 1.
inline Rational pochhammer(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational prod = 1;
  Rational factor = x;
  for (int i = 0; i < k; ++i, factor += 1) prod *= factor;
  return prod;
}

inline Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Rational prod = 1;
  for (int i = 2; i <= n; ++i) prod *= i;
  return prod;
}

// Generalized binomial coefficient x(x-1)...(x-k+1)/k!.
inline Rational binomial(const Rational& x, int k) {
  if (k < 0) return 0;
  Rational prod = 1;
  Rational factor = x;
  for (int i = 0; i < k; ++i, factor -= 1) prod *= factor;
  return prod / factorial(k);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// 1-based entry access, matching the k = 1..N indexing used throughout the
// structural formulas.
template <class Derived>
typename Eigen::MatrixBase<Derived>::Scalar& at1(Eigen::MatrixBase<Derived>& m,
                                                 int row, int col) {
  return m(row - 1, col - 1);
}

template <class Derived>
const typename Eigen::MatrixBase<Derived>::Scalar& at1(
    const Eigen::MatrixBase<Derived>& m, int row, int col) {
  return m(row - 1, col - 1);
}

}  // namespace mvlag

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 120,
    MulCost = 100,
  };
};

}  // namespace Eigen

#endif  // MVLAG_RATIONAL_HPP
