// Copyright 2026 The polardeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polardeg/profile_json.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>

#include "polardeg/error.hpp"

namespace polardeg {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw SchemaError(where + ": unknown key '" + key + "'");
  }
}

Int get_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw SchemaError(where + ": missing key '" + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError(where + "." + key + " must be an integer");
  return v.get<Int>();
}

std::optional<Int> get_optional_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return std::nullopt;
  return get_int(j, key, where);
}

const json& get_array(const json& j, const char* key, const std::string& where) {
  static const json empty = json::array();
  if (!j.contains(key)) return empty;
  const auto& v = j.at(key);
  if (!v.is_array()) throw SchemaError(where + "." + key + " must be an array");
  return v;
}

SpecialPoint special_point_from_json(const json& j, const std::string& where) {
  reject_unknown_keys(j, {"chi_fiber", "branch_count", "branch_multiplicities", "mu_section", "id"}, where);
  SpecialPoint q;
  q.chi_fiber = get_int(j, "chi_fiber", where);
  q.branch_count = get_int(j, "branch_count", where);
  if (j.contains("branch_multiplicities")) {
    std::vector<Int> mults;
    const auto& arr = get_array(j, "branch_multiplicities", where);
    for (const auto& m : arr) {
      if (!m.is_number_integer()) throw SchemaError(where + ".branch_multiplicities must hold integers");
      mults.push_back(m.get<Int>());
    }
    q.branch_multiplicities = std::move(mults);
  }
  q.mu_section = get_optional_int(j, "mu_section", where);
  if (j.contains("id")) {
    if (!j.at("id").is_string()) throw SchemaError(where + ".id must be a string");
    q.id = j.at("id").get<std::string>();
  }
  return q;
}

}  // namespace

SingularityProfile profile_from_json(const json& j) {
  reject_unknown_keys(j, {"n", "d", "isolated", "curves"}, "profile");
  SingularityProfile p;
  p.n = get_int(j, "n", "profile");
  p.d = get_int(j, "d", "profile");
  const auto& isolated = get_array(j, "isolated", "profile");
  for (std::size_t k = 0; k < isolated.size(); ++k) {
    const auto where = "isolated[" + std::to_string(k) + "]";
    reject_unknown_keys(isolated[k], {"mu", "mu_section"}, where);
    p.isolated.push_back({get_int(isolated[k], "mu", where), get_optional_int(isolated[k], "mu_section", where)});
  }
  const auto& curves = get_array(j, "curves", "profile");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto where = "curves[" + std::to_string(i) + "]";
    reject_unknown_keys(curves[i], {"genus", "degree", "mu_transversal", "special_points"}, where);
    CurveComponent c;
    c.genus = get_int(curves[i], "genus", where);
    c.degree = get_int(curves[i], "degree", where);
    c.mu_transversal = get_int(curves[i], "mu_transversal", where);
    const auto& points = get_array(curves[i], "special_points", where);
    for (std::size_t k = 0; k < points.size(); ++k) {
      c.special_points.push_back(special_point_from_json(points[k], where + ".special_points[" + std::to_string(k) + "]"));
    }
    p.curves.push_back(std::move(c));
  }
  p.validate();
  return p;
}

json profile_to_json(const SingularityProfile& p) {
  json j;
  j["n"] = p.n;
  j["d"] = p.d;
  j["isolated"] = json::array();
  for (const auto& a : p.isolated) {
    json e{{"mu", a.mu}};
    if (a.mu_section) e["mu_section"] = *a.mu_section;
    j["isolated"].push_back(std::move(e));
  }
  j["curves"] = json::array();
  for (const auto& c : p.curves) {
    json e{{"genus", c.genus}, {"degree", c.degree}, {"mu_transversal", c.mu_transversal}};
    e["special_points"] = json::array();
    for (const auto& q : c.special_points) {
      json s{{"chi_fiber", q.chi_fiber}, {"branch_count", q.branch_count}};
      if (q.branch_multiplicities) s["branch_multiplicities"] = *q.branch_multiplicities;
      if (q.mu_section) s["mu_section"] = *q.mu_section;
      if (q.id) s["id"] = *q.id;
      e["special_points"].push_back(std::move(s));
    }
    j["curves"].push_back(std::move(e));
  }
  return j;
}

SingularityProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open profile file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("profile file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return profile_from_json(j);
}

json pol_result_to_json(const PolResult& r) {
  json j;
  j["pol"] = r.pol;
  j["method"] = std::string(to_string(r.method));
  j["breakdown"] = json::array();
  for (const auto& c : r.breakdown) j["breakdown"].push_back({{"label", c.label}, {"value", c.value}});
  return j;
}

PolResult pol_result_from_json(const json& j) {
  reject_unknown_keys(j, {"pol", "method", "breakdown"}, "pol_result");
  PolResult r;
  r.pol = get_int(j, "pol", "pol_result");
  const auto method = j.at("method").get<std::string>();
  bool found = false;
  for (auto m : {Method::isolated_formula, Method::one_dim_formula, Method::union_formula, Method::yomdin,
                 Method::oracle}) {
    if (to_string(m) == method) {
      r.method = m;
      found = true;
    }
  }
  if (!found) throw SchemaError("pol_result: unknown method '" + method + "'");
  for (const auto& c : get_array(j, "breakdown", "pol_result")) {
    reject_unknown_keys(c, {"label", "value"}, "pol_result.breakdown");
    r.breakdown.push_back({c.at("label").get<std::string>(), get_int(c, "value", "pol_result.breakdown")});
  }
  return r;
}

}  // namespace polardeg
