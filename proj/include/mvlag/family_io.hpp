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

#ifndef MVLAG_FAMILY_IO_HPP
#define MVLAG_FAMILY_IO_HPP

#include <string>

#include <json.hpp>

#include "mvlag/family.hpp"

namespace mvlag {

// Builds a family from a specification document.  Two shapes are accepted:
//
//   {"N":2, "alpha":"3/2", "nu":"1", "mu_squared":["1","2"],
//    "c_over_d":"1", "d_levels":["1"], "max_shift":8, "delta":["1","2"]?}
//
//   {"example": 1|2|3,
//    "params": {"N":2, "alpha":"3/2", "nu":"1", "lambda":"1",
//               "rho":"1", "C":"0", "max_shift":8}}
//
// Rational fields accept "p/q" strings or plain JSON integers.
FamilySpec family_from_json(const nlohmann::json& doc, int default_max_shift = 10);

FamilySpec family_from_file(const std::string& path, int default_max_shift = 10);

nlohmann::json family_to_json(const FamilySpec& f);

}  // namespace mvlag

#endif  // MVLAG_FAMILY_IO_HPP
