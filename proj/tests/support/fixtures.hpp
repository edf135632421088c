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

#include "polardeg/formula.hpp"
#include "polardeg/profile.hpp"

namespace polardeg::testing {

inline SingularityProfile smooth_profile(Int n, Int d) {
  SingularityProfile p;
  p.n = n;
  p.d = d;
  return p;
}

inline SpecialPoint special(Int chi, std::optional<Int> mu_section = std::nullopt, Int branches = 1) {
  SpecialPoint q;
  q.chi_fiber = chi;
  q.branch_count = branches;
  q.mu_section = mu_section;
  return q;
}

inline CurveComponent line(Int mu_transversal, std::vector<SpecialPoint> points) {
  CurveComponent c;
  c.genus = 0;
  c.degree = 1;
  c.mu_transversal = mu_transversal;
  c.special_points = std::move(points);
  return c;
}

/// x0^2*x2 + x1^2*x3 in P^3: a line of transversal type A1 with two D_inf
/// points, whose Milnor fibres are 2-spheres.
inline SingularityProfile e1_profile() {
  auto p = smooth_profile(3, 3);
  p.curves.push_back(line(1, {special(2, 2), special(2, 2)}));
  return p;
}

/// x^2 z + y^2 w + t^3 in P^4: transversal type A2, two special points with
/// fibre S^3 v S^3.
inline SingularityProfile e1b_profile() {
  auto p = smooth_profile(4, 3);
  p.curves.push_back(line(2, {special(-1), special(-1)}));
  return p;
}

/// x0^2*x2 + x0*x1*x3 + x1^3: a line of type A1 with one J_{2,inf} point.
inline SingularityProfile e2_profile() {
  auto p = smooth_profile(3, 3);
  p.curves.push_back(line(1, {special(5, 2)}));
  return p;
}

/// Smooth quadric union a general plane: singular along a smooth conic.
inline SingularityProfile qp_profile() {
  auto p = smooth_profile(3, 3);
  CurveComponent conic;
  conic.genus = 0;
  conic.degree = 2;
  conic.mu_transversal = 1;
  p.curves.push_back(conic);
  return p;
}

/// Smooth quadric union a tangent plane: two lines through the point of
/// tangency.
inline SingularityProfile qt_profile() {
  auto p = smooth_profile(3, 3);
  auto q = special(2, 3);
  q.id = "tangency";
  p.curves.push_back(line(1, {q}));
  p.curves.push_back(line(1, {q}));
  return p;
}

/// Quadric cone union a general plane: the apex (A1) and a smooth conic.
inline SingularityProfile cp_profile() {
  auto p = qp_profile();
  p.isolated.push_back({1, 1});
  return p;
}

}  // namespace polardeg::testing
