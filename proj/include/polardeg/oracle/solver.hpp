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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polardeg/formula.hpp"
#include "polardeg/oracle/config.hpp"
#include "polardeg/oracle/fiber_system.hpp"
#include "polardeg/oracle/tracker.hpp"
#include "polardeg/polynomial.hpp"
#include "polardeg/profile.hpp"

namespace polardeg::oracle {

using StatusCounts = std::array<Int, std::size(kAllStatuses)>;

struct TrialRun {
  std::uint64_t seed = 0;
  std::vector<TrackResult> paths;  // in start-root order
  Int count = 0;                   // distinct regular endpoints
  Int duplicates = 0;              // regular endpoints merged into an earlier one
  StatusCounts statuses{};
};

struct OracleReport {
  Int pol_estimate = 0;
  std::vector<Int> per_trial_counts;
  Int paths_total = 0;
  Int bezout = 0;
  StatusCounts discarded{};  // indexed like kAllStatuses; the regular slot holds duplicates
  bool consensus = false;    // every trial produced the same count
  std::uint64_t seed = 0;
  Precision precision = Precision::double_precision;

  Int discarded_count(TrackStatus s) const { return discarded[static_cast<std::size_t>(s)]; }
};

/// Worker count used when 0 is requested.
unsigned default_workers();

/// One trial: fibre system, start system and gamma drawn from
/// derive_seed(cfg.seed, trial). The result does not depend on `workers`.
TrialRun run_trial(const Polynomial& f, const TrackerConfig& cfg, int trial, unsigned workers = 0);

/// Counts a generic fibre of the gradient map of f by majority vote over
/// cfg.trials trials. Throws DomainError for invalid f and BudgetExceeded
/// when (d-1)^n exceeds cfg.max_paths.
OracleReport solve_count(const Polynomial& f, const TrackerConfig& cfg = {}, unsigned workers = 0);

struct VerifyReport {
  OracleReport oracle;
  std::optional<PolResult> formula;
  std::optional<std::string> formula_error;  // set when the profile is inconsistent
  bool match = false;
};

/// Runs the oracle on f and the closed formula on p and compares them.
/// A disagreement is reported, not thrown.
VerifyReport verify(const Polynomial& f, const SingularityProfile& p, const TrackerConfig& cfg = {},
                    unsigned workers = 0);

}  // namespace polardeg::oracle
