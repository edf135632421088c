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

#include <map>
#include <random>
#include <string>

#include "polardeg/profile.hpp"

namespace polardeg::testing {

/// Random structurally valid profile with small invariants. Many of these
/// are not realizable by any hypersurface.
inline SingularityProfile random_profile(std::mt19937_64& rng) {
  auto pick = [&rng](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  SingularityProfile p;
  p.n = pick(2, 5);
  p.d = pick(2, 5);
  const Int isolated = pick(0, 3);
  for (Int k = 0; k < isolated; ++k) p.isolated.push_back({pick(1, 4), pick(1, 3)});
  const Int curves = pick(0, 2);
  for (Int i = 0; i < curves; ++i) {
    CurveComponent c;
    c.genus = pick(0, 2);
    c.degree = pick(1, 3);
    c.mu_transversal = pick(1, 3);
    const Int points = pick(0, 3);
    for (Int k = 0; k < points; ++k) {
      SpecialPoint q;
      q.chi_fiber = pick(-5, 6);
      q.branch_count = pick(1, 2);
      if (pick(0, 1) == 1) {
        std::vector<Int> mults;
        for (Int b = 0; b < q.branch_count; ++b) mults.push_back(pick(1, 2));
        q.branch_multiplicities = mults;
      }
      if (pick(0, 3) == 0) q.id = "shared" + std::to_string(pick(0, 1));
      c.special_points.push_back(q);
    }
    p.curves.push_back(std::move(c));
  }
  // Shared ids must agree on point-level data.
  std::map<std::string, SpecialPoint> first;
  for (auto& c : p.curves) {
    for (auto& q : c.special_points) {
      if (!q.id) continue;
      auto [it, inserted] = first.emplace(*q.id, q);
      if (!inserted) {
        q.chi_fiber = it->second.chi_fiber;
        q.mu_section = it->second.mu_section;
      }
    }
  }
  return p;
}

}  // namespace polardeg::testing
