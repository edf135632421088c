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

#include "polardeg/profile.hpp"

#include <map>
#include <numeric>

#include "polardeg/error.hpp"

namespace polardeg {

Int CurveComponent::gamma() const {
  return std::accumulate(special_points.begin(), special_points.end(), Int{0},
                         [](Int acc, const SpecialPoint& q) { return acc + q.branch_count; });
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw SchemaError(what);
}

}  // namespace

void SingularityProfile::validate() const {
  require(n >= 1, "n must be >= 1");
  require(d >= 1, "d must be >= 1");
  require(curves.empty() || n >= 2, "curve components need n >= 2");
  for (std::size_t k = 0; k < isolated.size(); ++k) {
    const auto where = "isolated[" + std::to_string(k) + "]";
    require(isolated[k].mu >= 1, where + ".mu must be >= 1");
    require(!isolated[k].mu_section || *isolated[k].mu_section >= 1, where + ".mu_section must be >= 1");
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const auto where = "curves[" + std::to_string(i) + "]";
    require(c.genus >= 0, where + ".genus must be >= 0");
    require(c.degree >= 1, where + ".degree must be >= 1");
    require(c.mu_transversal >= 1, where + ".mu_transversal must be >= 1");
    for (std::size_t j = 0; j < c.special_points.size(); ++j) {
      const auto& q = c.special_points[j];
      const auto qwhere = where + ".special_points[" + std::to_string(j) + "]";
      require(q.branch_count >= 1, qwhere + ".branch_count must be >= 1");
      require(!q.mu_section || *q.mu_section >= 1, qwhere + ".mu_section must be >= 1");
      if (q.branch_multiplicities) {
        require(static_cast<Int>(q.branch_multiplicities->size()) == q.branch_count,
                qwhere + ".branch_multiplicities must have branch_count entries");
        for (Int m : *q.branch_multiplicities) require(m >= 1, qwhere + ".branch_multiplicities must be >= 1");
      }
      require(!q.id || !q.id->empty(), qwhere + ".id must be non-empty");
    }
  }
  // Shared points must agree on the point-level data.
  std::map<std::string, const SpecialPoint*> seen;
  for (const auto& c : curves) {
    for (const auto& q : c.special_points) {
      if (!q.id) continue;
      auto [it, inserted] = seen.emplace(*q.id, &q);
      if (inserted) continue;
      require(it->second->chi_fiber == q.chi_fiber, "special point '" + *q.id + "' has conflicting chi_fiber");
      require(!it->second->mu_section || !q.mu_section || *it->second->mu_section == *q.mu_section,
              "special point '" + *q.id + "' has conflicting mu_section");
    }
  }
}

std::vector<MergedSpecialPoint> merged_special_points(const SingularityProfile& p) {
  std::vector<MergedSpecialPoint> out;
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < p.curves.size(); ++i) {
    const auto& c = p.curves[i];
    for (std::size_t j = 0; j < c.special_points.size(); ++j) {
      const auto& q = c.special_points[j];
      std::size_t slot;
      auto found = q.id ? by_id.find(*q.id) : by_id.end();
      if (found != by_id.end()) {
        slot = found->second;
      } else {
        slot = out.size();
        MergedSpecialPoint m;
        m.label = q.id ? *q.id : "curve" + std::to_string(i) + ".q" + std::to_string(j);
        m.chi_fiber = q.chi_fiber;
        out.push_back(std::move(m));
        if (q.id) by_id.emplace(*q.id, slot);
      }
      auto& merged = out[slot];
      if (!merged.mu_section) merged.mu_section = q.mu_section;
      for (Int b = 0; b < q.branch_count; ++b) {
        const Int mult = q.branch_multiplicities ? (*q.branch_multiplicities)[static_cast<std::size_t>(b)] : 1;
        merged.branches.push_back({mult, c.mu_transversal});
      }
    }
  }
  return out;
}

}  // namespace polardeg
