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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mvlag/family_io.hpp"
#include "mvlag/suites.hpp"
#include "mvlag/tables.hpp"

namespace {

struct CommonOpts {
  int example = 0;
  std::string spec_path;
  int N = 2;
  std::string alpha;
  std::string nu = "1";
  std::string lambda = "1";
  std::string rho = "1";
  std::string C = "0";
  int n_max = 3;
  std::string levels = "0";
  std::string format = "json";
  std::string out_path;
  int points = 40;
  std::vector<std::string> suites = {"all"};
};

void add_family_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--example", o.example, "built-in family (1, 2 or 3)")
      ->check(CLI::Range(1, 3));
  cmd->add_option("--spec", o.spec_path, "path to a JSON family document");
  cmd->add_option("--N", o.N, "matrix size");
  cmd->add_option("--alpha", o.alpha, "parameter alpha as p/q (defaults to nu)");
  cmd->add_option("--nu", o.nu, "parameter nu as p/q");
  cmd->add_option("--lambda", o.lambda, "example 2 scale parameter as p/q");
  cmd->add_option("--rho", o.rho, "example 3 slope parameter as p/q");
  cmd->add_option("--C", o.C, "example 3 offset parameter as p/q");
  cmd->add_option("--nmax", o.n_max, "largest polynomial degree");
  cmd->add_option("--levels", o.levels, "level range, single value or lo:hi");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "write output to this file instead of stdout");
  cmd->add_option("--points", o.points, "quadrature points for the numeric suite");
}

std::pair<int, int> parse_levels(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

mvlag::FamilySpec build_family(const CommonOpts& o, int level_max) {
  const int max_shift = level_max + o.n_max + 4;
  if (!o.spec_path.empty()) return mvlag::family_from_file(o.spec_path, max_shift);

  const mvlag::Rational nu = mvlag::rational_from_string(o.nu);
  const mvlag::Rational alpha =
      o.alpha.empty() ? nu : mvlag::rational_from_string(o.alpha);
  switch (o.example) {
    case 1:
      return mvlag::example1(o.N, alpha, nu, max_shift);
    case 2:
      return mvlag::example2(o.N, alpha, nu, mvlag::rational_from_string(o.lambda),
                             max_shift);
    case 3:
      return mvlag::example3(o.N, alpha, nu, mvlag::rational_from_string(o.rho),
                             mvlag::rational_from_string(o.C), max_shift);
    default:
      throw CLI::ValidationError("--example or --spec is required");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  out << text << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matrix-valued Laguerre-type orthogonal polynomial toolkit"};
  app.require_subcommand(1);

  CommonOpts vo, go, eo;
  double eval_x = 1.0;

  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  add_family_options(verify, vo);
  verify->add_option("--suite", vo.suites,
                     "suites to run: structure pearson mvop diffops numeric all")
      ->delimiter(',');

  CLI::App* generate = app.add_subcommand("generate", "emit coefficient and norm tables");
  add_family_options(generate, go);

  CLI::App* eval = app.add_subcommand("eval", "evaluate the weight and polynomials at x");
  add_family_options(eval, eo);
  eval->add_option("--x", eval_x, "evaluation point (nonnegative)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const auto [lo, hi] = parse_levels(vo.levels);
      mvlag::RunConfig cfg;
      cfg.level_min = lo;
      cfg.level_max = hi;
      cfg.n_max = vo.n_max;
      cfg.quad_points = vo.points;
      cfg.suites = vo.suites;
      const mvlag::FamilySpec fam = build_family(vo, hi);
      const mvlag::Report rep = mvlag::run_suites(fam, cfg);
      if (vo.format == "csv") {
        emit(mvlag::report_to_csv(rep), vo.out_path);
      } else {
        nlohmann::json doc = mvlag::report_to_json(rep);
        doc["family"] = mvlag::family_to_json(fam);
        emit(doc.dump(2), vo.out_path);
      }
      return rep.all_pass() ? 0 : 1;
    }
    if (generate->parsed()) {
      const auto [lo, hi] = parse_levels(go.levels);
      const mvlag::FamilySpec fam = build_family(go, hi);
      if (go.format == "csv") {
        std::string all;
        for (int level = lo; level <= hi; ++level)
          all += mvlag::generate_tables_csv(fam, level, go.n_max);
        emit(all, go.out_path);
      } else {
        nlohmann::json doc = nlohmann::json::array();
        for (int level = lo; level <= hi; ++level)
          doc.push_back(mvlag::generate_tables(fam, level, go.n_max));
        emit(doc.dump(2), go.out_path);
      }
      return 0;
    }
    if (eval->parsed()) {
      if (eval_x < 0) throw CLI::ValidationError("--x must be nonnegative");
      const auto [lo, hi] = parse_levels(eo.levels);
      const mvlag::FamilySpec fam = build_family(eo, hi);
      nlohmann::json doc = nlohmann::json::array();
      for (int level = lo; level <= hi; ++level)
        doc.push_back(mvlag::eval_tables(fam, level, eo.n_max, eval_x));
      emit(doc.dump(2), eo.out_path);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
