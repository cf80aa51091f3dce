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

#ifndef MVLAG_REPORT_HPP
#define MVLAG_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace mvlag {

// Outcome of one identity check.  `anchor` is a stable human-readable name
// for the identity, carried through to machine-readable reports.
struct Check {
  std::string identity;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string identity, std::string anchor, bool pass, std::string detail = "") {
    checks.push_back({std::move(identity), std::move(anchor), pass, std::move(detail)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
};

}  // namespace mvlag

#endif  // MVLAG_REPORT_HPP
