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

#include "polardeg/catalog.hpp"

#include <fstream>
#include <set>

#include "polardeg/error.hpp"
#include "polardeg/formula.hpp"
#include "polardeg/parse.hpp"
#include "polardeg/profile_json.hpp"

namespace polardeg {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw SchemaError(where + ": unknown key '" + key + "'");
  }
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw SchemaError(where + ": missing key '" + key + "'");
  return j.at(key);
}

std::string get_string(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) throw SchemaError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

Int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + "." + key + " must be an integer");
  return v.get<Int>();
}

Polynomial parse_checked(const std::string& text, Int n, const std::string& where) {
  try {
    return parse(text, static_cast<std::size_t>(n + 1));
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

CatalogEntry entry_from_json(const json& j, const std::string& where_suite) {
  if (!j.is_object()) throw SchemaError(where_suite + ": entries must be objects");
  CatalogEntry e;
  e.name = get_string(j, "name", where_suite);
  const std::string where = where_suite + "." + e.name;
  reject_unknown(j, {"name", "n", "equation", "profile", "parts", "chi_intersection", "expected_pol", "provenance", "cone"},
                 where);
  e.expected_pol = get_int(j, "expected_pol", where);
  e.provenance = get_string(j, "provenance", where);
  if (j.contains("cone")) {
    if (!j.at("cone").is_boolean()) throw SchemaError(where + ".cone must be a boolean");
    e.cone = j.at("cone").get<bool>();
  }
  if (j.contains("profile")) {
    e.profile = profile_from_json(j.at("profile"));
    e.n = e.profile->n;
    e.d = e.profile->d;
  }
  if (j.contains("n")) {
    const Int n = get_int(j, "n", where);
    if (e.profile && n != e.n) throw SchemaError(where + ": n disagrees with the profile");
    e.n = n;
  }
  if (!e.profile && !j.contains("n")) throw SchemaError(where + ": n is required without a profile");
  if (e.n < 1) throw SchemaError(where + ": n must be >= 1");

  if (j.contains("parts")) {
    const json& parts = j.at("parts");
    if (!parts.is_array() || parts.size() != 2) throw SchemaError(where + ".parts must list two equations");
    Int degree = 0;
    for (const auto& p : parts) {
      if (!p.is_string()) throw SchemaError(where + ".parts must be strings");
      e.parts.push_back(p.get<std::string>());
      const Polynomial f = parse_checked(e.parts.back(), e.n, where);
      if (f.is_zero() || !f.is_homogeneous()) throw SchemaError(where + ": parts must be nonzero forms");
      degree += f.degree();
    }
    if (e.profile && degree != e.d) throw SchemaError(where + ": degree of the parts disagrees with the profile");
    e.d = degree;
    e.chi_intersection = get_int(j, "chi_intersection", where);
  } else if (j.contains("chi_intersection")) {
    throw SchemaError(where + ": chi_intersection only applies to union rows");
  }

  if (j.contains("equation")) {
    if (e.is_union()) throw SchemaError(where + ": union rows take parts, not an equation");
    e.equation = get_string(j, "equation", where);
    const Polynomial f = parse_checked(*e.equation, e.n, where);
    if (f.is_zero() || !f.is_homogeneous()) throw SchemaError(where + ": equation must be a nonzero form");
    if (e.profile && static_cast<Int>(f.degree()) != e.d) {
      throw SchemaError(where + ": equation degree disagrees with the profile");
    }
    e.d = f.degree();
  }
  if (!e.equation && !e.profile && !e.is_union()) throw SchemaError(where + ": needs an equation or a profile");
  if (e.d < 1) throw SchemaError(where + ": degree must be >= 1");
  if (e.expected_pol < 0 || e.expected_pol > bezout_number(e.n, e.d)) {
    throw SchemaError(where + ": expected_pol outside [0, (d-1)^n]");
  }
  return e;
}

}  // namespace

std::optional<Polynomial> CatalogEntry::polynomial() const {
  const auto nvars = static_cast<std::size_t>(n + 1);
  if (equation) return parse(*equation, nvars);
  if (!is_union()) return std::nullopt;
  Polynomial product = Polynomial::constant(nvars, 1);
  for (const auto& p : parts) product *= parse(p, nvars);
  return product;
}

const CatalogSuite& Catalog::suite(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return s;
  }
  throw SchemaError("unknown catalog suite '" + name + "'");
}

Catalog catalog_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("catalog must be an object");
  reject_unknown(j, {"version", "description", "suites"}, "catalog");
  Catalog c;
  c.version = static_cast<int>(get_int(j, "version", "catalog"));
  if (c.version != 1) throw SchemaError("unsupported catalog version " + std::to_string(c.version));
  const json& suites = require(j, "suites", "catalog");
  if (!suites.is_array()) throw SchemaError("catalog.suites must be an array");
  std::set<std::string> suite_names;
  for (const auto& s : suites) {
    if (!s.is_object()) throw SchemaError("catalog suites must be objects");
    reject_unknown(s, {"name", "entries"}, "catalog suite");
    CatalogSuite suite;
    suite.name = get_string(s, "name", "catalog suite");
    if (!suite_names.insert(suite.name).second) throw SchemaError("duplicate suite '" + suite.name + "'");
    const json& entries = require(s, "entries", suite.name);
    if (!entries.is_array()) throw SchemaError(suite.name + ".entries must be an array");
    std::set<std::string> names;
    for (const auto& e : entries) {
      suite.entries.push_back(entry_from_json(e, suite.name));
      if (!names.insert(suite.entries.back().name).second) {
        throw SchemaError(suite.name + ": duplicate entry '" + suite.entries.back().name + "'");
      }
    }
    c.suites.push_back(std::move(suite));
  }
  return c;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open catalog '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("catalog '" + path + "' is not valid JSON: " + e.what());
  }
  return catalog_from_json(j);
}

std::string default_catalog_path() { return POLARDEG_CATALOG_PATH; }

RowResult run_entry(const std::string& suite, const CatalogEntry& e, const oracle::TrackerConfig& cfg,
                    unsigned workers) {
  RowResult r;
  r.suite = suite;
  r.name = e.name;
  r.expected = e.expected_pol;
  bool ok = true;
  auto note = [&](const std::string& msg) {
    if (!r.error.empty()) r.error += "; ";
    r.error += msg;
    ok = false;
  };

  if (e.profile) {
    try {
      r.formula = pol_one_dim(*e.profile).pol;
      if (*r.formula != e.expected_pol) ok = false;
    } catch (const InconsistentProfile& ex) {
      note(std::string("formula: ") + ex.what());
    }
    if (!e.cone) {
      try {
        r.lower_bound = lower_bounds(*e.profile);
        if (*r.lower_bound > e.expected_pol) note("lower bound exceeds pol");
      } catch (const MissingSectionalData&) {
        // No sectional data, no bound to check.
      } catch (const InconsistentProfile& ex) {
        note(std::string("lower bound: ") + ex.what());
      }
    }
  }

  bool consensus = true;
  auto oracle_count = [&](const Polynomial& f) -> std::optional<Int> {
    if (f.degree() < 2) return 0;  // a hyperplane has polar degree 0
    try {
      const oracle::OracleReport rep = oracle::solve_count(f, cfg, workers);
      if (!rep.consensus) {
        consensus = false;
        note("oracle trials disagree");
      }
      return rep.pol_estimate;
    } catch (const Error& ex) {
      note(std::string("oracle: ") + ex.what());
      return std::nullopt;
    }
  };

  if (const auto f = e.polynomial()) {
    r.oracle = oracle_count(*f);
    if (r.oracle) {
      r.oracle_consensus = consensus;
      if (*r.oracle != e.expected_pol) ok = false;
    }
  }

  if (e.is_union()) {
    const auto nvars = static_cast<std::size_t>(e.n + 1);
    const auto p1 = oracle_count(parse(e.parts[0], nvars));
    const auto p2 = oracle_count(parse(e.parts[1], nvars));
    if (p1 && p2) {
      try {
        r.union_value = union_pol(*p1, *p2, e.n, *e.chi_intersection);
        if (*r.union_value != e.expected_pol) ok = false;
      } catch (const InconsistentProfile& ex) {
        note(std::string("union: ") + ex.what());
      }
    }
  }
  r.pass = ok;
  return r;
}

std::vector<RowResult> run_suite(const CatalogSuite& s, const oracle::TrackerConfig& cfg, unsigned workers) {
  std::vector<RowResult> out;
  out.reserve(s.entries.size());
  for (const auto& e : s.entries) out.push_back(run_entry(s.name, e, cfg, workers));
  return out;
}

json row_to_json(const RowResult& r) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json j{{"suite", r.suite},
         {"name", r.name},
         {"expected", r.expected},
         {"formula", opt(r.formula)},
         {"oracle", opt(r.oracle)},
         {"consensus", opt(r.oracle_consensus)},
         {"union", opt(r.union_value)},
         {"lower_bound", opt(r.lower_bound)},
         {"pass", r.pass}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace polardeg
