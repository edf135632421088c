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

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace polardeg::oracle {

enum class Precision { double_precision, extended };

std::string_view to_string(Precision p);

/// Knobs of the homotopy tracker and the trial vote. None of them is a
/// worker count: results do not depend on how paths are scheduled.
struct TrackerConfig {
  std::uint64_t seed = 42;
  int trials = 5;                    // odd, independent random targets
  double newton_tol = 1e-10;         // endpoint residual for a regular solution
  double dedup_tol = 1e-6;           // projective distance for merging endpoints
  double divergence_bound = 1e8;     // coordinate magnitude treated as infinity
  int max_steps = 10000;             // per path attempt
  double min_step = 1e-14;           // smallest continuation step
  double singular_grad_tol = 1e-8;   // relative |grad f| marking Sing V
  double max_condition = 1e12;       // endpoint Jacobian condition bound
  double initial_step = 0.01;
  double max_step = 0.05;
  int retries = 3;                   // re-tracks of a path that failed mid-way
  std::size_t max_paths = 256;       // (d-1)^n budget
  Precision precision = Precision::double_precision;

  /// Throws DomainError for non-positive tolerances or an even trial count.
  void validate() const;
};

}  // namespace polardeg::oracle
