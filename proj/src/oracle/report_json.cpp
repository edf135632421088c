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

#include "polardeg/oracle/report_json.hpp"

#include <set>
#include <string>

#include "polardeg/error.hpp"
#include "polardeg/profile_json.hpp"

namespace polardeg::oracle {

using nlohmann::json;

namespace {

std::optional<TrackStatus> status_from_string(const std::string& s) {
  for (TrackStatus st : kAllStatuses) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("oracle report: missing key '") + key + "'");
  return j.at(key);
}

Int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string("oracle report: ") + what + " must be an integer");
  return j.get<Int>();
}

}  // namespace

json report_to_json(const OracleReport& r) {
  json discarded = json::object();
  for (TrackStatus s : kAllStatuses) {
    const std::string key = s == TrackStatus::regular ? "duplicate" : std::string(to_string(s));
    discarded[key] = r.discarded_count(s);
  }
  return json{{"pol_estimate", r.pol_estimate},
              {"per_trial_counts", r.per_trial_counts},
              {"paths_total", r.paths_total},
              {"bezout", r.bezout},
              {"discarded", discarded},
              {"consensus", r.consensus},
              {"seed", r.seed},
              {"precision", std::string(to_string(r.precision))}};
}

OracleReport report_from_json(const json& j) {
  static const std::set<std::string> known{"pol_estimate", "per_trial_counts", "paths_total", "bezout",
                                           "discarded",    "consensus",        "seed",        "precision"};
  if (!j.is_object()) throw SchemaError("oracle report must be an object");
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw SchemaError("oracle report: unknown key '" + key + "'");
  }
  OracleReport r;
  r.pol_estimate = integer(member(j, "pol_estimate"), "pol_estimate");
  const json& counts = member(j, "per_trial_counts");
  if (!counts.is_array()) throw SchemaError("oracle report: per_trial_counts must be an array");
  for (const auto& c : counts) r.per_trial_counts.push_back(integer(c, "trial count"));
  r.paths_total = integer(member(j, "paths_total"), "paths_total");
  r.bezout = integer(member(j, "bezout"), "bezout");
  const json& discarded = member(j, "discarded");
  if (!discarded.is_object()) throw SchemaError("oracle report: discarded must be an object");
  for (const auto& [key, value] : discarded.items()) {
    const auto st = key == "duplicate" ? std::optional(TrackStatus::regular) : status_from_string(key);
    if (!st || (*st == TrackStatus::regular && key != "duplicate")) {
      throw SchemaError("oracle report: unknown discard status '" + key + "'");
    }
    r.discarded[static_cast<std::size_t>(*st)] = integer(value, "discard count");
  }
  const json& consensus = member(j, "consensus");
  if (!consensus.is_boolean()) throw SchemaError("oracle report: consensus must be a boolean");
  r.consensus = consensus.get<bool>();
  const json& seed = member(j, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<Int>() >= 0)) {
    throw SchemaError("oracle report: seed must be a non-negative integer");
  }
  r.seed = seed.get<std::uint64_t>();
  const json& precision = member(j, "precision");
  if (precision == "extended") {
    r.precision = Precision::extended;
  } else if (precision != "double") {
    throw SchemaError("oracle report: precision must be \"double\" or \"extended\"");
  }
  return r;
}

json track_result_to_json(const TrackResult& r) {
  json endpoint = json::array();
  for (const auto& z : r.endpoint) endpoint.push_back({z.real(), z.imag()});
  return json{{"status", std::string(to_string(r.status))},
              {"endpoint", endpoint},
              {"residual", r.residual},
              {"condition_estimate", r.condition},
              {"grad_norm", r.grad_norm},
              {"t_reached", r.t_reached},
              {"steps", r.steps},
              {"retries", r.retries}};
}

json verify_to_json(const VerifyReport& v) {
  json j{{"oracle", report_to_json(v.oracle)}, {"match", v.match}};
  j["formula"] = v.formula ? pol_result_to_json(*v.formula) : json(nullptr);
  if (v.formula_error) j["formula_error"] = *v.formula_error;
  return j;
}

}  // namespace polardeg::oracle
