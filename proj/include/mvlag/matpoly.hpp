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

#ifndef MVLAG_MATPOLY_HPP
#define MVLAG_MATPOLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "mvlag/poly.hpp"
#include "mvlag/rational.hpp"

namespace mvlag {

template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <class Scalar>
bool matrices_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero_matrix<Scalar>(a - b);
}

// Polynomial in one variable with square matrix coefficients; coefficient i
// belongs to x^i and the highest stored coefficient is nonzero.  This is the
// (non-commutative) ring in which all structural identities are checked.
template <class Scalar>
class MatPoly {
 public:
  using Matrix = DenseMatrix<Scalar>;

  explicit MatPoly(int size) : size_(size) {
    if (size < 1) throw std::invalid_argument("MatPoly: size must be positive");
  }

  MatPoly(int size, std::vector<Matrix> coeffs) : size_(size), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.rows() != size_ || c.cols() != size_)
        throw std::invalid_argument("MatPoly: coefficient size mismatch");
    trim();
  }

  static MatPoly zero(int size) { return MatPoly(size); }

  static MatPoly constant(Matrix m) {
    const int n = static_cast<int>(m.rows());
    if (m.rows() != m.cols()) throw std::invalid_argument("MatPoly: square matrices only");
    std::vector<Matrix> c;
    c.push_back(std::move(m));
    return MatPoly(n, std::move(c));
  }

  static MatPoly identity(int size) {
    return constant(Matrix::Identity(size, size));
  }

  // x^power * m
  static MatPoly monomial(Matrix m, int power) {
    const int n = static_cast<int>(m.rows());
    if (m.rows() != m.cols()) throw std::invalid_argument("MatPoly: square matrices only");
    if (power < 0) throw std::invalid_argument("MatPoly: negative power");
    std::vector<Matrix> c(power + 1, Matrix::Zero(n, n));
    c[power] = std::move(m);
    return MatPoly(n, std::move(c));
  }

  // x * I
  static MatPoly variable(int size) {
    return monomial(Matrix::Identity(size, size), 1);
  }

  int size() const { return size_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Matrix coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Matrix::Zero(size_, size_);
    return coeffs_[i];
  }

  Matrix leading_coeff() const {
    return coeffs_.empty() ? Matrix::Zero(size_, size_) : coeffs_.back();
  }

  Poly<Scalar> entry(int row, int col) const {
    std::vector<Scalar> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i](row, col);
    return Poly<Scalar>(std::move(c));
  }

  MatPoly& operator+=(const MatPoly& o) {
    check_size(o);
    while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(Matrix::Zero(size_, size_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  MatPoly& operator-=(const MatPoly& o) {
    check_size(o);
    while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(Matrix::Zero(size_, size_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  MatPoly& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend MatPoly operator+(MatPoly a, const MatPoly& b) { a += b; return a; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { a -= b; return a; }
  friend MatPoly operator*(MatPoly a, const Scalar& s) { a *= s; return a; }
  friend MatPoly operator*(const Scalar& s, MatPoly a) { a *= s; return a; }
  friend MatPoly operator-(const MatPoly& a) { return a * Scalar(-1); }

  // Matrix-coefficient convolution; order matters.
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    a.check_size(b);
    if (a.is_zero() || b.is_zero()) return MatPoly(a.size_);
    std::vector<Matrix> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                          Matrix::Zero(a.size_, a.size_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j].noalias() += a.coeffs_[i] * b.coeffs_[j];
    return MatPoly(a.size_, std::move(c));
  }

  friend MatPoly operator*(const Matrix& m, const MatPoly& p) {
    return MatPoly::constant(m) * p;
  }
  friend MatPoly operator*(const MatPoly& p, const Matrix& m) {
    return p * MatPoly::constant(m);
  }

  friend bool operator==(const MatPoly& a, const MatPoly& b) {
    if (a.size_ != b.size_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!matrices_equal<Scalar>(a.coeffs_[i], b.coeffs_[i])) return false;
    return true;
  }
  friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

  MatPoly derivative() const {
    if (coeffs_.size() <= 1) return MatPoly(size_);
    std::vector<Matrix> c(coeffs_.size() - 1, Matrix::Zero(size_, size_));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Scalar(int(i)) * coeffs_[i];
    return MatPoly(size_, std::move(c));
  }

  // Entrywise transpose of every coefficient.  With real rational data this
  // realizes the adjoint; complex parameters are out of scope.
  MatPoly transpose_poly() const {
    std::vector<Matrix> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i].transpose();
    return MatPoly(size_, c);
  }

  Matrix eval(const Scalar& x) const {
    Matrix v = Matrix::Zero(size_, size_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = x * v + *it;
    return v;
  }

  // p(a*x)
  MatPoly scaled_argument(const Scalar& a) const {
    std::vector<Matrix> c = coeffs_;
    Scalar pw(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] *= pw;
      pw *= a;
    }
    return MatPoly(size_, std::move(c));
  }

  // p + s*I (scalar shift by a multiple of the identity)
  MatPoly shifted(const Scalar& s) const {
    MatPoly r = *this;
    if (r.coeffs_.empty()) r.coeffs_.push_back(Matrix::Zero(size_, size_));
    r.coeffs_[0] += s * Matrix::Identity(size_, size_);
    r.trim();
    return r;
  }

 private:
  void check_size(const MatPoly& o) const {
    if (size_ != o.size_) throw std::invalid_argument("MatPoly: size mismatch");
  }
  void trim() {
    while (!coeffs_.empty() && is_zero_matrix<Scalar>(coeffs_.back())) coeffs_.pop_back();
  }

  int size_;
  std::vector<Matrix> coeffs_;
};

using RatMatPoly = MatPoly<Rational>;

// e^{+xA} or e^{-xA} for nilpotent A, as the terminating series
// sum_{k<N} (+-x)^k A^k / k!.
template <class Scalar>
MatPoly<Scalar> nilpotent_exp(const DenseMatrix<Scalar>& a, bool negate = false) {
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw std::invalid_argument("nilpotent_exp: square matrix expected");
  std::vector<DenseMatrix<Scalar>> c;
  DenseMatrix<Scalar> power = DenseMatrix<Scalar>::Identity(n, n);
  Scalar coeff(1);
  for (int k = 0; k < n; ++k) {
    c.push_back(power * coeff);
    power = (power * a).eval();
    coeff *= Scalar(negate ? -1 : 1) / Scalar(k + 1);
  }
  if (!is_zero_matrix<Scalar>(power))
    throw std::invalid_argument("nilpotent_exp: matrix is not nilpotent");
  return MatPoly<Scalar>(n, std::move(c));
}

// Exact inverse of a unipotent lower triangular polynomial matrix by forward
// substitution on its entries.
template <class Scalar>
MatPoly<Scalar> unipotent_inverse(const MatPoly<Scalar>& p) {
  const int n = p.size();
  std::vector<std::vector<Poly<Scalar>>> e(n, std::vector<Poly<Scalar>>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) e[r][c] = p.entry(r, c);
  for (int r = 0; r < n; ++r) {
    if (e[r][r] != Poly<Scalar>(Scalar(1)))
      throw std::invalid_argument("unipotent_inverse: diagonal entries must be 1");
    for (int c = r + 1; c < n; ++c)
      if (!e[r][c].is_zero())
        throw std::invalid_argument("unipotent_inverse: matrix must be lower triangular");
  }

  std::vector<std::vector<Poly<Scalar>>> inv(n, std::vector<Poly<Scalar>>(n));
  for (int c = 0; c < n; ++c) {
    inv[c][c] = Poly<Scalar>(Scalar(1));
    for (int r = c + 1; r < n; ++r) {
      Poly<Scalar> acc;
      for (int k = c; k < r; ++k) acc += e[r][k] * inv[k][c];
      inv[r][c] = -acc;
    }
  }

  int deg = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) deg = std::max(deg, inv[r][c].degree());
  std::vector<DenseMatrix<Scalar>> coeffs(deg + 1, DenseMatrix<Scalar>::Zero(n, n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int i = 0; i <= inv[r][c].degree(); ++i) coeffs[i](r, c) = inv[r][c].coeff(i);
  return MatPoly<Scalar>(n, std::move(coeffs));
}

// X(X+1)...(X+k-1) with left-to-right multiplication; empty product is I.
template <class Scalar>
MatPoly<Scalar> matrix_pochhammer(const MatPoly<Scalar>& x, int k) {
  if (k < 0) throw std::invalid_argument("matrix_pochhammer: negative length");
  MatPoly<Scalar> prod = MatPoly<Scalar>::identity(x.size());
  for (int i = 0; i < k; ++i) prod = prod * x.shifted(Scalar(i));
  return prod;
}

// Solves A X = B exactly over the scalar field.  A may be rectangular; throws
// unless the solution exists and is unique (full column rank, consistent).
template <class Scalar>
DenseMatrix<Scalar> solve_unique(DenseMatrix<Scalar> a, DenseMatrix<Scalar> b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (b.rows() != rows) throw std::invalid_argument("solve_unique: shape mismatch");

  std::vector<Eigen::Index> pivot_of_col(cols, -1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, c) != Scalar(0)) { piv = r; break; }
    if (piv < 0) continue;
    a.row(rank).swap(a.row(piv));
    b.row(rank).swap(b.row(piv));
    const Scalar inv = Scalar(1) / a(rank, c);
    a.row(rank) *= inv;
    b.row(rank) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank) continue;
      if (a(r, c) != Scalar(0)) {
        const Scalar f = a(r, c);
        a.row(r) -= f * a.row(rank);
        b.row(r) -= f * b.row(rank);
      }
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  for (Eigen::Index c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0)
      throw std::runtime_error("solve_unique: solution is not unique");
  for (Eigen::Index r = rank; r < rows; ++r)
    if (!is_zero_matrix<Scalar>(b.row(r).eval()))
      throw std::runtime_error("solve_unique: no solution");

  DenseMatrix<Scalar> x = DenseMatrix<Scalar>::Zero(cols, b.cols());
  for (Eigen::Index c = 0; c < cols; ++c) x.row(c) = b.row(pivot_of_col[c]);
  return x;
}

template <class Scalar>
DenseMatrix<Scalar> exact_inverse(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: square matrix expected");
  return solve_unique<Scalar>(m, DenseMatrix<Scalar>::Identity(m.rows(), m.cols()));
}

// Finds the unique P with P * Q = R and deg P <= deg_bound, by equating
// coefficients and solving the resulting exact linear system row by row.
// Throws if no solution exists or if it is not unique within the bound.
template <class Scalar>
MatPoly<Scalar> solve_right_linear(const MatPoly<Scalar>& q, const MatPoly<Scalar>& r,
                                   int deg_bound) {
  if (q.size() != r.size()) throw std::invalid_argument("solve_right_linear: size mismatch");
  if (deg_bound < 0) throw std::invalid_argument("solve_right_linear: negative degree bound");
  if (q.is_zero()) throw std::runtime_error("solve_right_linear: zero divisor");
  const int n = q.size();
  const int dq = q.degree();
  const int dprod = deg_bound + dq;
  if (r.degree() > dprod) throw std::runtime_error("solve_right_linear: no solution");

  // Unknown rows u = [P_0.row, ..., P_b.row]; u * S = corresponding rows of R
  // with S built from coefficients of Q.
  const int ucols = (deg_bound + 1) * n;
  const int vcols = (dprod + 1) * n;
  DenseMatrix<Scalar> s = DenseMatrix<Scalar>::Zero(ucols, vcols);
  for (int i = 0; i <= deg_bound; ++i)
    for (int m = i; m <= i + dq; ++m)
      s.block(i * n, m * n, n, n) = q.coeff(m - i);

  DenseMatrix<Scalar> rhs = DenseMatrix<Scalar>::Zero(vcols, n);
  for (int m = 0; m <= dprod; ++m)
    rhs.block(m * n, 0, n, n) = r.coeff(m).transpose();

  const DenseMatrix<Scalar> sol = solve_unique<Scalar>(s.transpose(), rhs);

  std::vector<DenseMatrix<Scalar>> coeffs(deg_bound + 1, DenseMatrix<Scalar>::Zero(n, n));
  for (int i = 0; i <= deg_bound; ++i)
    coeffs[i] = sol.block(i * n, 0, n, n).transpose();
  return MatPoly<Scalar>(n, std::move(coeffs));
}

}  // namespace mvlag

#endif  // MVLAG_MATPOLY_HPP
