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

#ifndef MVLAG_TABLES_HPP
#define MVLAG_TABLES_HPP

#include <string>

#include <json.hpp>

#include "mvlag/family.hpp"
#include "mvlag/report.hpp"

namespace mvlag {

// Coefficient/norm/recurrence tables for P_0..P_nmax at one level.  Rational
// entries are emitted as lossless "p/q" strings; matrix indices are 1-based.
nlohmann::json generate_tables(const FamilySpec& f, int level, int n_max);

// Same data flattened to CSV, one coefficient per row:
//   table,n,i,j,power,value
std::string generate_tables_csv(const FamilySpec& f, int level, int n_max);

// Floating-point values of W(x) and P_0..P_nmax(x).
nlohmann::json eval_tables(const FamilySpec& f, int level, int n_max, double x);

// Machine-readable verification report.
nlohmann::json report_to_json(const Report& rep);
std::string report_to_csv(const Report& rep);

}  // namespace mvlag

#endif  // MVLAG_TABLES_HPP
