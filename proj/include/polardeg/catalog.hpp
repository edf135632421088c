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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polardeg/oracle/solver.hpp"
#include "polardeg/profile.hpp"

namespace polardeg {

/// One regression row: an equation, a profile, or both, with the expected
/// polar degree. Union rows instead list the components and the Euler
/// characteristic of their intersection minus a generic hyperplane.
struct CatalogEntry {
  std::string name;
  Int n = 0;
  Int d = 0;
  std::optional<std::string> equation;
  std::optional<SingularityProfile> profile;
  std::vector<std::string> parts;
  std::optional<Int> chi_intersection;
  Int expected_pol = 0;
  std::string provenance;
  bool cone = false;

  bool is_union() const { return !parts.empty(); }
  /// The equation (or the product of the parts) in n+1 variables.
  std::optional<Polynomial> polynomial() const;
};

struct CatalogSuite {
  std::string name;
  std::vector<CatalogEntry> entries;
};

struct Catalog {
  int version = 0;
  std::vector<CatalogSuite> suites;

  /// Throws SchemaError for an unknown suite name.
  const CatalogSuite& suite(const std::string& name) const;
};

/// Strict loader; throws SchemaError on malformed documents and on entries
/// whose equation, profile and expected value do not fit together.
Catalog catalog_from_json(const nlohmann::json& j);
Catalog load_catalog(const std::string& path);
/// Location of the catalog shipped with the sources.
std::string default_catalog_path();

/// Outcome of one row. Unavailable routes are left empty.
struct RowResult {
  std::string suite;
  std::string name;
  Int expected = 0;
  std::optional<Int> formula;
  std::optional<Int> oracle;
  std::optional<bool> oracle_consensus;
  std::optional<Int> union_value;
  std::optional<Int> lower_bound;
  std::string error;
  bool pass = false;
};

/// Runs every route available for the entry and compares with the
/// expected value. Formula errors are recorded in the row, not thrown.
RowResult run_entry(const std::string& suite, const CatalogEntry& e, const oracle::TrackerConfig& cfg,
                    unsigned workers);
std::vector<RowResult> run_suite(const CatalogSuite& s, const oracle::TrackerConfig& cfg, unsigned workers);

nlohmann::json row_to_json(const RowResult& r);

}  // namespace polardeg
