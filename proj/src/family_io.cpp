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

#include "mvlag/family_io.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mvlag {
namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& key,
                        std::optional<Rational> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw std::invalid_argument("family document: missing field '" + key + "'");
  }
  const json& v = j.at(key);
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("family document: field '" + key +
                              "' must be a \"p/q\" string or an integer");
}

std::vector<Rational> rational_array(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument("family document: missing array field '" + key + "'");
  std::vector<Rational> out;
  for (const auto& v : j.at(key)) {
    if (v.is_string())
      out.push_back(rational_from_string(v.get<std::string>()));
    else if (v.is_number_integer())
      out.push_back(Rational(v.get<long>()));
    else
      throw std::invalid_argument("family document: array '" + key +
                                  "' must hold \"p/q\" strings or integers");
  }
  return out;
}

}  // namespace

FamilySpec family_from_json(const nlohmann::json& doc, int default_max_shift) {
  if (doc.contains("example")) {
    const int which = doc.at("example").get<int>();
    const json params = doc.value("params", json::object());
    const int n = params.value("N", 2);
    const Rational nu = rational_field(params, "nu", Rational(1));
    const Rational alpha = rational_field(params, "alpha", nu);
    const int max_shift = params.value("max_shift", default_max_shift);
    switch (which) {
      case 1:
        return example1(n, alpha, nu, max_shift);
      case 2:
        return example2(n, alpha, nu, rational_field(params, "lambda", Rational(1)),
                        max_shift);
      case 3:
        return example3(n, alpha, nu, rational_field(params, "rho", Rational(1)),
                        rational_field(params, "C", Rational(0)), max_shift);
      default:
        throw std::invalid_argument("family document: example must be 1, 2 or 3");
    }
  }

  const int n = doc.value("N", 0);
  if (n < 1) throw std::invalid_argument("family document: missing or invalid N");
  const Rational nu = rational_field(doc, "nu");
  const Rational alpha = rational_field(doc, "alpha", nu);
  const std::vector<Rational> mu_squared = rational_array(doc, "mu_squared");
  const Rational c_over_d = rational_field(doc, "c_over_d");
  std::vector<Rational> d_levels = doc.contains("d_levels")
                                       ? rational_array(doc, "d_levels")
                                       : std::vector<Rational>{Rational(1)};
  const int max_shift = doc.value("max_shift", default_max_shift);
  std::optional<std::vector<Rational>> delta;
  if (doc.contains("delta")) delta = rational_array(doc, "delta");
  return make_family(n, alpha, nu, mu_squared, c_over_d, std::move(d_levels), max_shift,
                     std::move(delta));
}

FamilySpec family_from_file(const std::string& path, int default_max_shift) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family document: " + path);
  json doc;
  in >> doc;
  return family_from_json(doc, default_max_shift);
}

nlohmann::json family_to_json(const FamilySpec& f) {
  json doc;
  doc["N"] = f.N;
  doc["alpha"] = to_string(f.alpha);
  doc["nu"] = to_string(f.nu);
  json mu2 = json::array();
  for (const auto& m : f.mu_squared) mu2.push_back(to_string(m));
  doc["mu_squared"] = mu2;
  json c = json::array(), d = json::array();
  for (const auto& v : f.c_levels) c.push_back(to_string(v));
  for (const auto& v : f.d_levels) d.push_back(to_string(v));
  doc["c_levels"] = c;
  doc["d_levels"] = d;
  json delta = json::array();
  for (const auto& v : f.delta(0)) delta.push_back(to_string(v));
  doc["delta_canonical"] = delta;
  doc["max_shift"] = f.max_shift;
  if (const auto rho = detect_rho(f)) doc["rho"] = to_string(*rho);
  if (!f.notes.empty()) doc["notes"] = f.notes;
  return doc;
}

}  // namespace mvlag
