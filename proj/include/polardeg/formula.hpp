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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polardeg/profile.hpp"

namespace polardeg {

enum class Method { isolated_formula, one_dim_formula, union_formula, yomdin, oracle };

std::string_view to_string(Method m);

/// A labeled additive term of a polar degree computation.
struct Contribution {
  std::string label;
  Int value = 0;

  bool operator==(const Contribution&) const = default;
};

struct PolResult {
  Int pol = 0;
  Method method = Method::one_dim_formula;
  std::vector<Contribution> breakdown;  // sums to pol
};

/// (-1)^k.
constexpr Int sign_pow(Int k) { return (k % 2 == 0) ? 1 : -1; }

/// (d-1)^n, the polar degree of a smooth hypersurface. Throws DomainError
/// on overflow.
Int bezout_number(Int n, Int d);

/// Polar degree of a hypersurface with only isolated singularities:
/// (d-1)^n minus the sum of Milnor numbers.
PolResult pol_isolated(const SingularityProfile& p);

/// 2g + gamma + (d+1) deg - 2, the weight of mu_transversal for one curve.
Int curve_coefficient(const CurveComponent& c, Int d);

/// Polar degree of a hypersurface whose singular locus has dimension <= 1:
///
///   pol = (d-1)^n - sum mu_p - sum_i c_i mu_i + (-1)^n sum_q (chi(A_q) - 1)
///
/// Throws InconsistentProfile when the value leaves [0, (d-1)^n].
PolResult pol_one_dim(const SingularityProfile& p);

/// Euler characteristic of a smooth degree-d hypersurface in P^n:
/// n + 1 - (1 + (-1)^n (d-1)^(n+1)) / d. Defined for n >= 0.
Int chi_smooth(Int n, Int d);

/// Euler characteristic of V.
Int chi_V(const SingularityProfile& p);

/// Euler characteristic of V cut by a generic hyperplane.
Int chi_slice(const SingularityProfile& p);

/// chi(V) - chi(V cap H) == 1 + (-1)^(n-1) pol(V). Holds for every valid
/// profile; a false result means a bug in one of the three routes.
bool consistency_check(const SingularityProfile& p);

/// pol(V1 u V2) = pol1 + pol2 + (-1)^n (chi(V1 n V2 minus H) - 1).
Int union_pol(Int pol1, Int pol2, Int n, Int chi_affine_intersection);

/// Milnor number jump mu(V n H, p) - sum_i mult_i * mu_i at a point of the
/// singular curve. Throws InconsistentProfile on a negative result.
Int alpha_jump(Int mu_section, std::span<const Int> branch_multiplicities, std::span<const Int> mu_transversals);

/// Complex-link Milnor number of one special point.
struct SpecialAlpha {
  std::string label;
  Int alpha = 0;
};

/// alpha_q for every isolated point and every special point of the curve
/// part. Throws MissingSectionalData when a point lacks mu_section.
std::vector<SpecialAlpha> special_point_alphas(const SingularityProfile& p);

/// max_q alpha_q over all special points (0 if there are none). A lower
/// bound for pol(V) unless V is a cone.
Int lower_bounds(const SingularityProfile& p);

/// Necessary condition for pol(V) == 1: every special point has alpha == 1.
bool homaloidal_filter(const SingularityProfile& p);

/// Yomdin-type comparison of V with f + s l^d.
struct YomdinResult {
  Int pol = 0;            // pol(V) from the one-dimensional formula
  Int pol_slice = 0;      // pol(V n H_gen)
  Int pol_deformed = 0;   // pol(V_s) = (d-1) pol_slice
  Int slice_sum = 0;      // sum_i deg_i * mu_i
  Int slice_bezout = 0;   // (d-1)^(n-1)

  bool semicontinuity_holds() const { return pol <= pol_deformed; }
  bool slice_bound_holds() const { return slice_sum <= slice_bezout; }
  bool holds() const { return semicontinuity_holds() && slice_bound_holds(); }
};

YomdinResult yomdin_pol(const SingularityProfile& p);
bool yomdin_inequality(const SingularityProfile& p);

/// Local data of one branch of a 1-dimensional singular germ: intersection
/// multiplicity with the hyperplane and transversal Milnor number.
struct YomdinBranch {
  Int intersection = 1;
  Int mu_transversal = 1;
};

/// Milnor number of g + s l^N: b_top - b_sub + N * sum_j d_j mu_j, with the
/// Betti numbers of the Milnor fibre of g supplied by the caller.
Int yomdin_local_mu_betti(Int b_top, Int b_sub, Int N, std::span<const YomdinBranch> branches);

/// Same with empty polar locus: -mu(g restricted to l=0) + N * sum_j d_j mu_j.
/// Requires N >= 2. Throws InconsistentProfile on a negative result.
Int yomdin_local_mu(Int mu_slice, Int N, std::span<const YomdinBranch> branches);

/// Milnor number at a generic point of the slice after the deformation:
/// (d-1) * mu_transversal.
Int yomdin_transversal_mu(Int mu_transversal, Int d);

/// Euler characteristic of the Milnor fibre at the apex of the cone over a
/// degree-d hypersurface of P^(n-1) with isolated singularities of Milnor
/// numbers `mus`: 1 + (-1)^(n-1) ((d-1)^n - d sum mu).
Int cone_chi_fiber(Int n, Int d, std::span<const Int> mus);

/// Singularity profile of that cone: one line per mu through a shared apex.
/// For an empty list the apex is an isolated point.
SingularityProfile cone_profile(Int n, Int d, std::span<const Int> mus);

/// pol_one_dim(cone_profile(...)) == 0.
bool cone_pol_check(Int n, Int d, std::span<const Int> mus);

/// Polar degree can only go up under small deformations.
bool semicontinuity_expectation(Int pol_special, Int pol_nearby);

}  // namespace polardeg
