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

#ifndef MVLAG_QUADRATURE_HPP
#define MVLAG_QUADRATURE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mvlag/weight.hpp"

namespace mvlag {

// Nodes and weights for integration against e^{-x} x^nu / Gamma(nu+1) on the
// half line; the weights sum to one.
struct QuadratureRule {
  double nu = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Orthonormal recurrence values p_0..p_n and the derivative of p_n at x, for
// the weight e^{-x} x^nu / Gamma(nu+1):  a_k = 2k+nu+1, b_k = sqrt(k(k+nu)).
inline void orthonormal_laguerre(double nu, int n, double x, std::vector<double>& p,
                                 double& dpn) {
  p.assign(n + 1, 0.0);
  p[0] = 1.0;
  double dprev = 0.0, dcur = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * k + nu + 1;
    const double b_next = std::sqrt((k + 1) * (k + 1 + nu));
    const double b_cur = k == 0 ? 0.0 : std::sqrt(k * (k + nu));
    p[k + 1] = ((x - a) * p[k] - (k == 0 ? 0.0 : b_cur * p[k - 1])) / b_next;
    const double dnext = ((x - a) * dcur + p[k] - (k == 0 ? 0.0 : b_cur * dprev)) / b_next;
    dprev = dcur;
    dcur = dnext;
  }
  dpn = dcur;
}

}  // namespace detail

// Golub-Welsch nodes from the symmetric tridiagonal eigenproblem, polished by
// Newton steps on the orthonormal recurrence; weights from the Christoffel
// function w_i = 1/sum_k p_k(x_i)^2.  The Christoffel form keeps the tiny
// trailing weights relatively accurate, which the squared first eigenvector
// component does not.
inline QuadratureRule gauss_laguerre(double nu, int points) {
  if (!(nu > -1)) throw std::invalid_argument("gauss_laguerre: nu must exceed -1");
  if (points < 1) throw std::invalid_argument("gauss_laguerre: need at least one point");

  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(points, points);
  for (int k = 0; k < points; ++k) {
    jac(k, k) = 2 * k + nu + 1;
    if (k > 0) {
      const double off = std::sqrt(k * (k + nu));
      jac(k, k - 1) = off;
      jac(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("gauss_laguerre: eigen solver failed");

  QuadratureRule rule;
  rule.nu = nu;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  std::vector<double> p;
  for (int i = 0; i < points; ++i) {
    double x = eig.eigenvalues()(i);
    double dpn = 0;
    for (int iter = 0; iter < 3; ++iter) {
      detail::orthonormal_laguerre(nu, points, x, p, dpn);
      if (dpn == 0) break;
      const double step = p[points] / dpn;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::abs(x)) {
        detail::orthonormal_laguerre(nu, points, x, p, dpn);
        break;
      }
    }
    double christoffel = 0;
    for (int k = 0; k < points; ++k) christoffel += p[k] * p[k];
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / christoffel;
  }
  return rule;
}

inline Eigen::MatrixXd eval_double(const RatMatPoly& p, double x) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(p.size(), p.size());
  for (int m = p.degree(); m >= 0; --m) {
    v *= x;
    const RatMatrix c = p.coeff(m);
    for (int r = 0; r < p.size(); ++r)
      for (int col = 0; col < p.size(); ++col) v(r, col) += to_double(c(r, col));
  }
  return v;
}

// Quadrature evaluation of <P, Q> in Gamma(nu+1) units; smoke test against
// the exact engine, not a replacement for it.
inline Eigen::MatrixXd numeric_inner_product(const RatMatPoly& p, const RatMatPoly& q,
                                             const WeightForm& w, int points) {
  const int needed = (p.degree() + q.degree() + w.q.degree()) / 2 + 1;
  if (points < needed)
    throw std::invalid_argument("numeric_inner_product: insufficient quadrature points");
  const QuadratureRule rule = gauss_laguerre(to_double(w.nu), points);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(w.N, w.N);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    acc += rule.weights[i] *
           (eval_double(p, x) * eval_double(w.q, x) * eval_double(q, x).transpose());
  }
  return acc;
}

struct PositivityReport {
  bool all_positive = false;
  double min_eigenvalue = 0;
  double at_x = 0;
  int samples = 0;
};

// Samples W(x) = e^{-x} x^nu q(x) at logarithmically spaced points and
// reports the smallest eigenvalue encountered.
inline PositivityReport positivity_probe(const WeightForm& w, int samples,
                                         double x_max = -1) {
  if (samples < 1) throw std::invalid_argument("positivity_probe: need samples >= 1");
  const double nu = to_double(w.nu);
  if (x_max <= 0) x_max = nu + 5 * w.N + 50;
  const double lo = std::log10(1e-3);
  const double hi = std::log10(x_max);

  PositivityReport out;
  out.samples = samples;
  bool first = true;
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? hi : lo + (hi - lo) * i / (samples - 1);
    const double x = std::pow(10.0, t);
    const double scale = std::exp(-x) * std::pow(x, nu);
    Eigen::MatrixXd wx = scale * eval_double(w.q, x);
    // enforce exact symmetry before the self-adjoint solve
    wx = 0.5 * (wx + wx.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(wx);
    const double lambda_min = eig.eigenvalues().minCoeff();
    if (first || lambda_min < out.min_eigenvalue) {
      out.min_eigenvalue = lambda_min;
      out.at_x = x;
      first = false;
    }
  }
  out.all_positive = out.min_eigenvalue > 0;
  return out;
}

}  // namespace mvlag

#endif  // MVLAG_QUADRATURE_HPP
