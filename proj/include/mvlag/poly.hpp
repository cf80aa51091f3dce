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

#ifndef MVLAG_POLY_HPP
#define MVLAG_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mvlag/rational.hpp"

namespace mvlag {

// Dense univariate polynomial with exact coefficients, coefficient i is the
// coefficient of x^i. The highest stored coefficient is nonzero; the zero
// polynomial stores nothing and has degree -1.
template <class Scalar>
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& constant) { coeffs_.push_back(constant); trim(); }
  Poly(int constant) : Poly(Scalar(constant)) {}

  static Poly variable() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[i];
  }

  Scalar leading_coeff() const {
    return coeffs_.empty() ? Scalar(0) : coeffs_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(Poly a, const Scalar& s) { a *= s; return a; }
  friend Poly operator*(const Scalar& s, Poly a) { a *= s; return a; }
  friend Poly operator-(const Poly& a) { return a * Scalar(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Scalar> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Scalar(int(i)) * coeffs_[i];
    return Poly(std::move(c));
  }

  Scalar eval(const Scalar& x) const {
    Scalar v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
  }

  // p(a*x)
  Poly scaled_argument(const Scalar& a) const {
    std::vector<Scalar> c = coeffs_;
    Scalar pw(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] *= pw;
      pw *= a;
    }
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RatPoly = Poly<Rational>;

}  // namespace mvlag

#endif  // MVLAG_POLY_HPP
