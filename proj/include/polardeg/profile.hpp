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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polardeg {

using Int = std::int64_t;

/// Isolated singular point: Milnor number and, optionally, the Milnor
/// number of its generic hyperplane section.
struct IsolatedPoint {
  Int mu = 1;
  std::optional<Int> mu_section;

  bool operator==(const IsolatedPoint&) const = default;
};

/// Point of a singular curve where the transversal type jumps.
///
/// Points carrying the same `id` on several curve components are one and
/// the same point of the hypersurface (e.g. the apex shared by the lines of
/// a cone); each occurrence adds its branches to its own curve, but the
/// Milnor fibre term is counted once.
struct SpecialPoint {
  Int chi_fiber = 1;    // Euler characteristic of the local Milnor fibre
  Int branch_count = 1; // local branches of this curve component here
  std::optional<std::vector<Int>> branch_multiplicities;
  std::optional<Int> mu_section;
  std::optional<std::string> id;

  bool operator==(const SpecialPoint&) const = default;
};

/// Irreducible component of the 1-dimensional singular locus.
struct CurveComponent {
  Int genus = 0;          // genus of the normalization
  Int degree = 1;         // degree as a reduced curve
  Int mu_transversal = 1; // Milnor number of the generic transversal slice
  std::vector<SpecialPoint> special_points;

  /// Number of punctures: total local branch count over the special points.
  Int gamma() const;
  /// Number of axis points of a generic degree-d pencil on this curve.
  Int axis_points(Int d) const { return d * degree; }

  bool operator==(const CurveComponent&) const = default;
};

/// Complete singularity data of a hypersurface V of degree d in P^n.
struct SingularityProfile {
  Int n = 1;
  Int d = 1;
  std::vector<IsolatedPoint> isolated;
  std::vector<CurveComponent> curves;

  bool is_smooth() const { return isolated.empty() && curves.empty(); }
  /// Throws SchemaError when a field violates its range constraints or
  /// shared special points disagree.
  void validate() const;

  bool operator==(const SingularityProfile&) const = default;
};

/// One branch through a special point: the branch multiplicity and the
/// transversal Milnor number of the curve it belongs to.
struct BranchTerm {
  Int multiplicity = 1;
  Int mu_transversal = 1;
};

/// A distinct special point on the curve part, with all its occurrences
/// merged.
struct MergedSpecialPoint {
  std::string label;
  Int chi_fiber = 1;
  std::optional<Int> mu_section;
  std::vector<BranchTerm> branches;
};

/// Special points of the curve part, merged by id, in first-occurrence
/// order.
std::vector<MergedSpecialPoint> merged_special_points(const SingularityProfile& p);

}  // namespace polardeg
