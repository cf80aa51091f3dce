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

#include "mvlag/tables.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mvlag/diffops.hpp"
#include "mvlag/family_io.hpp"
#include "mvlag/mvop.hpp"
#include "mvlag/quadrature.hpp"

namespace mvlag {
namespace {

using nlohmann::json;

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json matpoly_to_json(const RatMatPoly& p) {
  json coeffs = json::array();
  for (int m = 0; m <= p.degree(); ++m) coeffs.push_back(matrix_to_json(p.coeff(m)));
  return coeffs;
}

void csv_matrix(std::ostream& os, const std::string& table, int n, const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << table << ',' << n << ',' << i + 1 << ',' << j + 1 << ",0,"
         << to_string(m(i, j)) << '\n';
}

}  // namespace

json generate_tables(const FamilySpec& f, int level, int n_max) {
  if (n_max < 0) throw std::invalid_argument("generate_tables: negative n_max");
  if (level < 0 || level + n_max > f.max_shift)
    throw std::invalid_argument("generate_tables: level + n_max must not exceed max_shift");

  json doc;
  doc["family"] = family_to_json(f);
  doc["level"] = level;
  doc["gamma_base"] = to_string(f.nu + level);

  const std::vector<RatMatPoly> p = monic_from_recurrence(f, level, n_max);
  json polys = json::array();
  for (int n = 0; n <= n_max; ++n)
    polys.push_back({{"n", n}, {"coeffs", matpoly_to_json(p[n])}});
  doc["P"] = polys;

  json norms = json::array(), bs = json::array(), cs = json::array();
  json gammas = json::array(), lambdas = json::array(), ks = json::array();
  for (int n = 0; n <= n_max; ++n) {
    norms.push_back({{"n", n}, {"matrix", matrix_to_json(squared_norm(f, level, n).value)}});
    bs.push_back({{"n", n}, {"matrix", matrix_to_json(recurrence_b(f, level, n))}});
    if (n >= 1)
      cs.push_back({{"n", n}, {"matrix", matrix_to_json(recurrence_c(f, level, n))}});
    gammas.push_back({{"n", n}, {"matrix", matrix_to_json(eigenvalue_gamma(f, level, n))}});
    lambdas.push_back({{"n", n}, {"matrix", matrix_to_json(eigenvalue_lambda(f, level, n))}});
    ks.push_back({{"n", n}, {"matrix", matrix_to_json(raising_constant(f, n, level))}});
  }
  doc["H"] = norms;
  doc["B"] = bs;
  doc["C"] = cs;
  doc["Gamma"] = gammas;
  doc["Lambda"] = lambdas;
  doc["K"] = ks;
  return doc;
}

std::string generate_tables_csv(const FamilySpec& f, int level, int n_max) {
  if (n_max < 0) throw std::invalid_argument("generate_tables_csv: negative n_max");
  if (level < 0 || level + n_max > f.max_shift)
    throw std::invalid_argument("generate_tables_csv: level + n_max must not exceed max_shift");

  std::ostringstream os;
  os << "table,n,i,j,power,value\n";
  const std::vector<RatMatPoly> p = monic_from_recurrence(f, level, n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= p[n].degree(); ++m) {
      const RatMatrix c = p[n].coeff(m);
      for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j)
          os << "P," << n << ',' << i + 1 << ',' << j + 1 << ',' << m << ','
             << to_string(c(i, j)) << '\n';
    }
  for (int n = 0; n <= n_max; ++n) {
    csv_matrix(os, "H", n, squared_norm(f, level, n).value);
    csv_matrix(os, "B", n, recurrence_b(f, level, n));
    if (n >= 1) csv_matrix(os, "C", n, recurrence_c(f, level, n));
    csv_matrix(os, "Gamma", n, eigenvalue_gamma(f, level, n));
    csv_matrix(os, "Lambda", n, eigenvalue_lambda(f, level, n));
    csv_matrix(os, "K", n, raising_constant(f, n, level));
  }
  return os.str();
}

json eval_tables(const FamilySpec& f, int level, int n_max, double x) {
  if (x < 0) throw std::invalid_argument("eval_tables: x must be nonnegative");
  if (level < 0 || level + n_max > f.max_shift)
    throw std::invalid_argument("eval_tables: level + n_max must not exceed max_shift");

  json doc;
  doc["level"] = level;
  doc["x"] = x;
  const WeightForm w = weight_at_level(f, level);
  const double nu = to_double(w.nu);
  // For x = 0 the x^nu factor forces the limit 0 entrywise (nu > 0).
  const double scale = x == 0 ? 0.0 : std::exp(-x) * std::pow(x, nu);
  doc["W"] = matrix_to_json(Eigen::MatrixXd(scale * eval_double(w.q, x)));

  const std::vector<RatMatPoly> p = monic_from_recurrence(f, level, n_max);
  json polys = json::array();
  for (int n = 0; n <= n_max; ++n)
    polys.push_back({{"n", n}, {"value", matrix_to_json(eval_double(p[n], x))}});
  doc["P"] = polys;
  return doc;
}

json report_to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json item;
    item["identity"] = c.identity;
    item["paper_ref"] = c.anchor;
    item["status"] = c.pass ? "pass" : "fail";
    item["detail"] = c.detail.empty() ? json::object() : json({{"note", c.detail}});
    checks.push_back(item);
  }
  json doc;
  doc["checks"] = checks;
  doc["all_pass"] = rep.all_pass();
  doc["failures"] = rep.failures();
  return doc;
}

std::string report_to_csv(const Report& rep) {
  const auto sanitize = [](std::string s) {
    for (auto& ch : s)
      if (ch == ',' || ch == '\n') ch = ';';
    return s;
  };
  std::ostringstream os;
  os << "identity,paper_ref,status,detail\n";
  for (const auto& c : rep.checks)
    os << sanitize(c.identity) << ',' << sanitize(c.anchor) << ','
       << (c.pass ? "pass" : "fail") << ',' << sanitize(c.detail) << '\n';
  return os.str();
}

}  // namespace mvlag
