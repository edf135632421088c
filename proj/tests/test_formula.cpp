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

#include <gtest/gtest.h>

#include <numeric>

#include "polardeg/error.hpp"
#include "polardeg/formula.hpp"
#include "polardeg/parse.hpp"
#include "support/fixtures.hpp"
#include "support/local_milnor.hpp"

namespace polardeg {
namespace {

using namespace polardeg::testing;

// Euler characteristic of a smooth degree-d hypersurface from its total
// Chern class: chi = d * [h^(n-1)] (1+h)^(n+1) / (1+d h).
Int chi_smooth_chern(Int n, Int d) {
  auto binom = [](Int a, Int b) {
    if (b < 0 || b > a) return Int{0};
    Int r = 1;
    for (Int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  Int coeff = 0;
  Int power = 1;
  for (Int k = 0; k <= n - 1; ++k) {
    coeff += binom(n + 1, n - 1 - k) * power;
    power *= -d;
  }
  return d * coeff;
}

Int sum_breakdown(const PolResult& r) {
  return std::accumulate(r.breakdown.begin(), r.breakdown.end(), Int{0},
                         [](Int a, const Contribution& c) { return a + c.value; });
}

TEST(PolIsolated, CubicSurfaces) {
  EXPECT_EQ(pol_isolated(smooth_profile(3, 3)).pol, 8);

  auto four_nodes = smooth_profile(3, 3);
  for (int k = 0; k < 4; ++k) four_nodes.isolated.push_back({1, std::nullopt});
  const auto r = pol_isolated(four_nodes);
  EXPECT_EQ(r.pol, 4);
  EXPECT_EQ(r.method, Method::isolated_formula);
  EXPECT_EQ(r.breakdown.size(), 5u);
  EXPECT_EQ(sum_breakdown(r), 4);

  auto e6_tilde = smooth_profile(3, 3);
  e6_tilde.isolated.push_back({8, std::nullopt});
  EXPECT_EQ(pol_isolated(e6_tilde).pol, 0);
}

TEST(PolIsolated, Errors) {
  EXPECT_THROW(pol_isolated(e1_profile()), DomainError);
  auto too_many = smooth_profile(3, 3);
  too_many.isolated.push_back({9, std::nullopt});
  EXPECT_THROW(pol_isolated(too_many), InconsistentProfile);
}

TEST(CurveCoefficient, Examples) {
  EXPECT_EQ(curve_coefficient(line(1, {special(2), special(2)}), 3), 4);
  EXPECT_EQ(curve_coefficient(line(1, {special(2)}), 3), 3);
  CurveComponent elliptic;
  elliptic.genus = 1;
  elliptic.degree = 2;
  EXPECT_EQ(curve_coefficient(elliptic, 2), 6);
}

TEST(PolOneDim, WorkedExamples) {
  const auto r = pol_one_dim(e1_profile());
  EXPECT_EQ(r.pol, 2);
  EXPECT_EQ(r.method, Method::one_dim_formula);
  EXPECT_EQ(sum_breakdown(r), 2);
  // (d-1)^n, the curve term, and one fibre term per special point.
  ASSERT_EQ(r.breakdown.size(), 4u);
  EXPECT_EQ(r.breakdown[0].value, 8);
  EXPECT_EQ(r.breakdown[1].value, -4);
  EXPECT_EQ(r.breakdown[2].value + r.breakdown[3].value, -2);

  EXPECT_EQ(pol_one_dim(e1b_profile()).pol, 4);
  for (Int n = 1; n <= 4; ++n) {
    for (Int d = 1; d <= 4; ++d) EXPECT_EQ(pol_one_dim(smooth_profile(n, d)).pol, bezout_number(n, d));
  }
}

TEST(PolOneDim, NonIsolatedCubics) {
  EXPECT_EQ(pol_one_dim(e2_profile()).pol, 1);
  EXPECT_EQ(pol_one_dim(qp_profile()).pol, 2);
  EXPECT_EQ(pol_one_dim(qt_profile()).pol, 1);
  EXPECT_EQ(pol_one_dim(cp_profile()).pol, 1);
}

TEST(PolOneDim, SharedSpecialPointCountedOnce) {
  const auto r = pol_one_dim(qt_profile());
  int fibre_terms = 0;
  for (const auto& c : r.breakdown) fibre_terms += c.label.find("chi(A_q)") != std::string::npos;
  EXPECT_EQ(fibre_terms, 1);

  auto conflicting = qt_profile();
  conflicting.curves[1].special_points[0].chi_fiber = 3;
  EXPECT_THROW(pol_one_dim(conflicting), SchemaError);
}

TEST(ChiSmooth, Examples) {
  EXPECT_EQ(chi_smooth(3, 1), 3);
  EXPECT_EQ(chi_smooth(3, 3), 9);  // P^2 blown up in six points
  EXPECT_EQ(chi_smooth(2, 3), 0);  // torus
  EXPECT_EQ(chi_smooth(2, 2), 2);  // conic
}

TEST(ChiSmooth, MatchesChernClassComputation) {
  for (Int n = 1; n <= 7; ++n) {
    for (Int d = 1; d <= 6; ++d) EXPECT_EQ(chi_smooth(n, d), chi_smooth_chern(n, d)) << n << "," << d;
  }
}

TEST(ChiV, Examples) {
  // chi(V minus H) = 1 + (-1)^(n-1) pol = 3 and chi(V n H) = 1 (nodal cubic).
  EXPECT_EQ(chi_V(e1_profile()), 3 + 1);
  EXPECT_EQ(chi_V(smooth_profile(4, 3)), chi_smooth(4, 3));
  auto nodes = smooth_profile(3, 3);
  nodes.isolated.push_back({1, std::nullopt});
  nodes.isolated.push_back({2, std::nullopt});
  EXPECT_EQ(chi_V(nodes), chi_smooth(3, 3) - 3);
}

TEST(ChiSlice, Examples) {
  EXPECT_EQ(chi_slice(e1_profile()), 1);
  EXPECT_EQ(chi_slice(smooth_profile(4, 3)), chi_smooth(3, 3));
  EXPECT_EQ(chi_slice(smooth_profile(3, 2)), 2);
}

TEST(Consistency, Fixtures) {
  EXPECT_TRUE(consistency_check(e1_profile()));
  EXPECT_EQ(chi_V(e1_profile()) - chi_slice(e1_profile()), 3);
  for (Int n = 1; n <= 5; ++n) {
    for (Int d = 1; d <= 5; ++d) EXPECT_TRUE(consistency_check(smooth_profile(n, d)));
  }
  for (const auto& p : {e1b_profile(), e2_profile(), qp_profile(), qt_profile(), cp_profile()}) {
    EXPECT_TRUE(consistency_check(p));
  }
}

TEST(UnionPol, ReducibleCubics) {
  // Smooth quadric and general plane meet in a conic; minus two points at H.
  EXPECT_EQ(union_pol(1, 0, 3, 0), 2);
  // Tangent plane: two crossing lines minus two points.
  EXPECT_EQ(union_pol(1, 0, 3, 1), 1);
  // Quadric cone and general plane: again a conic minus two points.
  EXPECT_EQ(union_pol(0, 0, 3, 0), 1);
  EXPECT_EQ(union_pol(5, 0, 3, 1), 5);
  EXPECT_THROW(union_pol(0, 0, 3, 5), InconsistentProfile);
}

TEST(AlphaJump, Examples) {
  const std::vector<Int> one{1};
  EXPECT_EQ(alpha_jump(2, one, one), 1);
  EXPECT_EQ(alpha_jump(1, one, one), 0);
  const std::vector<Int> mults{1, 2};
  const std::vector<Int> mus{1, 1};
  EXPECT_EQ(alpha_jump(5, mults, mus), 2);
  EXPECT_THROW(alpha_jump(1, mults, mus), InconsistentProfile);
  EXPECT_THROW(alpha_jump(1, one, mus), DomainError);
}

TEST(SectionalData, BruteForceLocalMilnorNumbers) {
  // Generic plane sections, computed from local equations at the origin.
  const std::vector<Rational> plane{Rational(3, 2), Rational(-5, 7)};
  // E6: x^2 + y^3 + z^4 sliced by z = a x + b y.
  EXPECT_EQ(local_milnor_number(restrict_to_hyperplane(parse("x0^2+x1^3+x2^4", 3), plane)), 2u);
  // A_k: x^2 + y^2 + z^(k+1).
  for (int k = 1; k <= 5; ++k) {
    const auto ak = parse("x0^2+x1^2+x2^" + std::to_string(k + 1), 3);
    EXPECT_EQ(local_milnor_number(ak), static_cast<std::size_t>(k));
    EXPECT_EQ(local_milnor_number(restrict_to_hyperplane(ak, plane)), 1u);
  }
  // D4: x^3 + y^3 + z^2.
  const auto d4 = parse("x0^3+x1^3+x2^2", 3);
  EXPECT_EQ(local_milnor_number(d4), 4u);
  EXPECT_EQ(local_milnor_number(restrict_to_hyperplane(d4, plane)), 2u);
  // E6 surface germ itself.
  EXPECT_EQ(local_milnor_number(parse("x0^2+x1^3+x2^4", 3)), 6u);
  // D_inf point of x0^2*x2 + x1^2*x3 (chart x2 = 1): x0^2 + x1^2*x3.
  EXPECT_EQ(local_milnor_number(restrict_to_hyperplane(parse("x0^2+x1^2*x2", 3), plane)), 2u);
  // J_{2,inf}: y^2 (y - x^2) + z^2 with the singular line along x.
  EXPECT_EQ(local_milnor_number(restrict_to_hyperplane(parse("x1^3-x1^2*x0^2+x2^2", 3), plane)), 2u);
  // Tangency point of quadric and tangent plane: z (z - x y).
  const std::vector<Rational> through_z{Rational(2, 3), Rational(-7, 5)};
  const auto qt_local = parse("x2^2-x0*x1*x2", 3);
  EXPECT_EQ(local_milnor_number(restrict_to_hyperplane(qt_local, through_z)), 3u);
}

TEST(LowerBounds, Examples) {
  auto e6 = smooth_profile(3, 3);
  e6.isolated.push_back({6, 2});
  EXPECT_EQ(lower_bounds(e6), 2);
  EXPECT_GE(pol_one_dim(e6).pol, lower_bounds(e6));

  auto a3 = smooth_profile(3, 3);
  a3.isolated.push_back({3, 1});
  EXPECT_EQ(lower_bounds(a3), 1);

  EXPECT_EQ(lower_bounds(smooth_profile(3, 3)), 0);
  EXPECT_EQ(lower_bounds(e1_profile()), 1);
  EXPECT_EQ(lower_bounds(qt_profile()), 1);

  auto missing = smooth_profile(3, 3);
  missing.isolated.push_back({1, std::nullopt});
  EXPECT_THROW(lower_bounds(missing), MissingSectionalData);
}

TEST(HomaloidalFilter, Examples) {
  EXPECT_TRUE(homaloidal_filter(e2_profile()));
  auto d4 = smooth_profile(3, 3);
  d4.isolated.push_back({4, 2});
  EXPECT_FALSE(homaloidal_filter(d4));
  EXPECT_TRUE(homaloidal_filter(smooth_profile(3, 2)));
  EXPECT_THROW(homaloidal_filter(e1b_profile()), MissingSectionalData);
}

TEST(Yomdin, ProfileValues) {
  const auto y = yomdin_pol(e1_profile());
  EXPECT_EQ(y.pol_slice, 3);
  EXPECT_EQ(y.pol_deformed, 6);
  EXPECT_EQ(y.pol, 2);
  EXPECT_TRUE(y.holds());

  // Cross-check against the isolated formula on the slice: a plane cubic
  // with one node.
  auto slice = smooth_profile(2, 3);
  slice.isolated.push_back({1, std::nullopt});
  EXPECT_EQ(pol_isolated(slice).pol, y.pol_slice);

  const auto ys = yomdin_pol(smooth_profile(3, 3));
  EXPECT_EQ(ys.pol_deformed, 8);
  EXPECT_EQ(ys.pol, 8);

  const auto yb = yomdin_pol(e1b_profile());
  EXPECT_EQ(yb.pol_slice, 6);
  EXPECT_EQ(yb.pol_deformed, 12);
  EXPECT_TRUE(yb.holds());
  auto cusp_slice = smooth_profile(3, 3);
  cusp_slice.isolated.push_back({2, std::nullopt});
  EXPECT_EQ(pol_isolated(cusp_slice).pol, yb.pol_slice);

  auto violating = smooth_profile(3, 3);
  violating.curves.push_back(line(5, {}));
  EXPECT_FALSE(yomdin_inequality(violating));
  EXPECT_FALSE(yomdin_pol(violating).slice_bound_holds());
}

TEST(Yomdin, LocalMilnorNumbers) {
  EXPECT_EQ(yomdin_transversal_mu(1, 3), 2);
  EXPECT_EQ(yomdin_transversal_mu(2, 3), 4);
  const std::vector<YomdinBranch> branches{{1, 1}, {2, 1}};
  EXPECT_EQ(yomdin_local_mu(3, 5, branches), 12);
  EXPECT_EQ(yomdin_local_mu_betti(0, 3, 5, branches), 12);
  EXPECT_EQ(yomdin_local_mu_betti(2, 3, 5, branches), 14);
  EXPECT_THROW(yomdin_local_mu(3, 1, branches), DomainError);
  EXPECT_THROW(yomdin_local_mu(100, 2, branches), InconsistentProfile);
}

TEST(Yomdin, TransversalFormulaMatchesBruteForce) {
  // A line of transversal type A1 at a generic point: x^2 + y^2 (line
  // along z). Deforming by s*l^3 with l generic gives Milnor number 2 on
  // the slice l = 0 point; A2 transversal gives 4.
  const auto a1_line = parse("x0^2+x1^2 + x2^3", 3);
  EXPECT_EQ(local_milnor_number(a1_line), static_cast<std::size_t>(yomdin_transversal_mu(1, 3)));
  const auto a2_line = parse("x0^2+x1^3 + x2^3", 3);
  EXPECT_EQ(local_milnor_number(a2_line), static_cast<std::size_t>(yomdin_transversal_mu(2, 3)));
}

TEST(Cone, ChiFiberAndPolarDegree) {
  const std::vector<Int> node{1};
  const std::vector<Int> cusp{2};
  const std::vector<Int> none;
  EXPECT_EQ(cone_chi_fiber(3, 3, node), 6);
  EXPECT_EQ(cone_chi_fiber(3, 3, cusp), 3);
  EXPECT_TRUE(cone_pol_check(3, 3, node));
  EXPECT_TRUE(cone_pol_check(3, 3, cusp));
  EXPECT_TRUE(cone_pol_check(3, 3, none));
  EXPECT_EQ(pol_one_dim(cone_profile(3, 3, none)).pol, 0);
  EXPECT_EQ(cone_profile(3, 3, none).isolated.front().mu, 8);

  // Milnor fibre of a homogeneous g in C^n is d copies of the complement
  // of {g = 0} in P^(n-1): chi = d * (n - chi(V')). Nodal cubic: chi(V') = 1.
  EXPECT_EQ(cone_chi_fiber(3, 3, node), 3 * (3 - 1));
  EXPECT_EQ(cone_chi_fiber(3, 3, cusp), 3 * (3 - 2));
}

TEST(SemiContinuity, Expectation) {
  EXPECT_TRUE(semicontinuity_expectation(2, 6));
  EXPECT_TRUE(semicontinuity_expectation(3, 3));
  EXPECT_FALSE(semicontinuity_expectation(3, 2));
}

}  // namespace
}  // namespace polardeg
