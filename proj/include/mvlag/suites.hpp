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

#ifndef MVLAG_SUITES_HPP
#define MVLAG_SUITES_HPP

#include <string>
#include <vector>

#include "mvlag/family.hpp"
#include "mvlag/report.hpp"

namespace mvlag {

// Tolerances of the floating-point smoke layer.  The exact engine is the
// referee; these only guard the numeric cross-check.
inline constexpr double kRelTol = 1e-10;
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kQuadRelTol = 1e-12;

struct RunConfig {
  int level_min = 0;
  int level_max = 0;
  int n_max = 3;
  int quad_points = 40;
  // any of: structure, pearson, mvop, diffops, numeric, all
  std::vector<std::string> suites = {"all"};
};

Report run_structure_suite(const FamilySpec& f, const RunConfig& cfg);
Report run_pearson_suite(const FamilySpec& f, const RunConfig& cfg);
Report run_mvop_suite(const FamilySpec& f, const RunConfig& cfg);
Report run_diffops_suite(const FamilySpec& f, const RunConfig& cfg);
Report run_numeric_suite(const FamilySpec& f, const RunConfig& cfg);

Report run_suites(const FamilySpec& f, const RunConfig& cfg);

}  // namespace mvlag

#endif  // MVLAG_SUITES_HPP
