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

#include "polardeg/formula.hpp"

#include <algorithm>
#include <numeric>

#include "polardeg/error.hpp"

namespace polardeg {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::isolated_formula: return "isolated-formula";
    case Method::one_dim_formula: return "one-dim-formula";
    case Method::union_formula: return "union";
    case Method::yomdin: return "yomdin";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

namespace {

Int checked_pow(Int base, Int exp) {
  if (exp < 0) throw DomainError("negative exponent");
  Int result = 1;
  for (Int k = 0; k < exp; ++k) {
    if (__builtin_mul_overflow(result, base, &result)) throw DomainError("integer overflow in power");
  }
  return result;
}

PolResult checked(PolResult r, Int n, Int d) {
  const Int bound = bezout_number(n, d);
  if (r.pol < 0 || r.pol > bound) {
    throw InconsistentProfile("inconsistent profile: formula gives pol = " + std::to_string(r.pol) +
                              ", outside [0, " + std::to_string(bound) + "]");
  }
  return r;
}

// Breakdown of the one-dimensional formula without range checks.
PolResult one_dim_raw(const SingularityProfile& p) {
  PolResult r;
  r.method = p.curves.empty() ? Method::isolated_formula : Method::one_dim_formula;
  r.breakdown.push_back({"(d-1)^n", bezout_number(p.n, p.d)});
  for (std::size_t k = 0; k < p.isolated.size(); ++k) {
    r.breakdown.push_back({"-mu_p[" + std::to_string(k) + "]", -p.isolated[k].mu});
  }
  for (std::size_t i = 0; i < p.curves.size(); ++i) {
    const Int c = curve_coefficient(p.curves[i], p.d);
    r.breakdown.push_back({"-c_i*mu_perp_i[" + std::to_string(i) + "] (c_i=" + std::to_string(c) + ")",
                           -c * p.curves[i].mu_transversal});
  }
  for (const auto& q : merged_special_points(p)) {
    r.breakdown.push_back({"(-1)^n*(chi(A_q)-1)[" + q.label + "]", sign_pow(p.n) * (q.chi_fiber - 1)});
  }
  r.pol = std::accumulate(r.breakdown.begin(), r.breakdown.end(), Int{0},
                          [](Int acc, const Contribution& c) { return acc + c.value; });
  return r;
}

}  // namespace

Int bezout_number(Int n, Int d) {
  if (n < 0 || d < 1) throw DomainError("bezout_number needs n >= 0 and d >= 1");
  return checked_pow(d - 1, n);
}

PolResult pol_isolated(const SingularityProfile& p) {
  p.validate();
  if (!p.curves.empty()) throw DomainError("pol_isolated: profile has curve components");
  return checked(one_dim_raw(p), p.n, p.d);
}

Int curve_coefficient(const CurveComponent& c, Int d) {
  return 2 * c.genus + c.gamma() + (d + 1) * c.degree - 2;
}

PolResult pol_one_dim(const SingularityProfile& p) {
  p.validate();
  return checked(one_dim_raw(p), p.n, p.d);
}

Int chi_smooth(Int n, Int d) {
  if (n < 0 || d < 1) throw DomainError("chi_smooth needs n >= 0 and d >= 1");
  const Int numerator = 1 + sign_pow(n) * checked_pow(d - 1, n + 1);
  if (numerator % d != 0) {
    throw DomainError("chi_smooth: non-integral Euler characteristic for n=" + std::to_string(n) +
                      ", d=" + std::to_string(d));
  }
  return n + 1 - numerator / d;
}

Int chi_V(const SingularityProfile& p) {
  p.validate();
  Int curve_part = 0;
  for (const auto& c : p.curves) {
    curve_part += (2 * c.genus + c.gamma() + c.axis_points(p.d) - 2) * c.mu_transversal;
  }
  Int fibre_part = 0;
  for (const auto& q : merged_special_points(p)) fibre_part += q.chi_fiber - 1;
  Int milnor = 0;
  for (const auto& a : p.isolated) milnor += a.mu;
  return chi_smooth(p.n, p.d) + sign_pow(p.n) * curve_part - fibre_part + sign_pow(p.n) * milnor;
}

Int chi_slice(const SingularityProfile& p) {
  p.validate();
  Int sum = 0;
  for (const auto& c : p.curves) sum += c.degree * c.mu_transversal;
  return chi_smooth(p.n - 1, p.d) + sign_pow(p.n - 1) * sum;
}

bool consistency_check(const SingularityProfile& p) {
  return chi_V(p) - chi_slice(p) == 1 + sign_pow(p.n - 1) * one_dim_raw(p).pol;
}

Int union_pol(Int pol1, Int pol2, Int n, Int chi_affine_intersection) {
  const Int pol = pol1 + pol2 + sign_pow(n) * (chi_affine_intersection - 1);
  if (pol < 0) throw InconsistentProfile("union formula gives negative pol = " + std::to_string(pol));
  return pol;
}

Int alpha_jump(Int mu_section, std::span<const Int> branch_multiplicities, std::span<const Int> mu_transversals) {
  if (branch_multiplicities.size() != mu_transversals.size() || branch_multiplicities.empty()) {
    throw DomainError("alpha_jump needs equal-length, non-empty branch lists");
  }
  Int generic = 0;
  for (std::size_t i = 0; i < branch_multiplicities.size(); ++i) {
    generic += branch_multiplicities[i] * mu_transversals[i];
  }
  const Int alpha = mu_section - generic;
  if (alpha < 0) {
    throw InconsistentProfile("negative Milnor number jump: mu_section " + std::to_string(mu_section) +
                              " < " + std::to_string(generic));
  }
  return alpha;
}

std::vector<SpecialAlpha> special_point_alphas(const SingularityProfile& p) {
  p.validate();
  std::vector<SpecialAlpha> out;
  for (std::size_t k = 0; k < p.isolated.size(); ++k) {
    const auto label = "isolated[" + std::to_string(k) + "]";
    if (!p.isolated[k].mu_section) throw MissingSectionalData(label + " has no mu_section");
    out.push_back({label, *p.isolated[k].mu_section});
  }
  for (const auto& q : merged_special_points(p)) {
    if (!q.mu_section) throw MissingSectionalData("special point " + q.label + " has no mu_section");
    std::vector<Int> mults;
    std::vector<Int> mus;
    for (const auto& b : q.branches) {
      mults.push_back(b.multiplicity);
      mus.push_back(b.mu_transversal);
    }
    out.push_back({q.label, alpha_jump(*q.mu_section, mults, mus)});
  }
  return out;
}

Int lower_bounds(const SingularityProfile& p) {
  Int best = 0;
  for (const auto& a : special_point_alphas(p)) best = std::max(best, a.alpha);
  return best;
}

bool homaloidal_filter(const SingularityProfile& p) {
  const auto alphas = special_point_alphas(p);
  return std::all_of(alphas.begin(), alphas.end(), [](const SpecialAlpha& a) { return a.alpha == 1; });
}

YomdinResult yomdin_pol(const SingularityProfile& p) {
  YomdinResult y;
  y.pol = one_dim_raw(p).pol;
  p.validate();
  if (p.n < 1) throw DomainError("yomdin_pol needs n >= 1");
  for (const auto& c : p.curves) y.slice_sum += c.degree * c.mu_transversal;
  y.slice_bezout = bezout_number(p.n - 1, p.d);
  y.pol_slice = y.slice_bezout - y.slice_sum;
  y.pol_deformed = (p.d - 1) * y.pol_slice;
  return y;
}

bool yomdin_inequality(const SingularityProfile& p) { return yomdin_pol(p).holds(); }

Int yomdin_local_mu_betti(Int b_top, Int b_sub, Int N, std::span<const YomdinBranch> branches) {
  Int sum = 0;
  for (const auto& b : branches) sum += b.intersection * b.mu_transversal;
  return b_top - b_sub + N * sum;
}

Int yomdin_local_mu(Int mu_slice, Int N, std::span<const YomdinBranch> branches) {
  if (N < 2) throw DomainError("yomdin_local_mu needs N >= 2");
  const Int mu = yomdin_local_mu_betti(0, mu_slice, N, branches);
  if (mu < 0) throw InconsistentProfile("Yomdin formula gives negative Milnor number " + std::to_string(mu));
  return mu;
}

Int yomdin_transversal_mu(Int mu_transversal, Int d) {
  const YomdinBranch branch{1, mu_transversal};
  return yomdin_local_mu(mu_transversal, d, std::span(&branch, 1));
}

Int cone_chi_fiber(Int n, Int d, std::span<const Int> mus) {
  const Int total = std::accumulate(mus.begin(), mus.end(), Int{0});
  return 1 + sign_pow(n - 1) * (bezout_number(n, d) - d * total);
}

SingularityProfile cone_profile(Int n, Int d, std::span<const Int> mus) {
  if (n < 2 || d < 2) throw DomainError("cone_profile needs n >= 2 and d >= 2");
  SingularityProfile p;
  p.n = n;
  p.d = d;
  const Int chi = cone_chi_fiber(n, d, mus);
  if (mus.empty()) {
    // Cone over a smooth hypersurface: the apex is an isolated singularity
    // whose Milnor fibre is a bouquet of (d-1)^n spheres.
    p.isolated.push_back({sign_pow(n - 1) * (chi - 1), std::nullopt});
    return p;
  }
  for (Int mu : mus) {
    CurveComponent line;
    line.genus = 0;
    line.degree = 1;
    line.mu_transversal = mu;
    SpecialPoint apex;
    apex.chi_fiber = chi;
    apex.branch_count = 1;
    apex.id = "apex";
    line.special_points.push_back(apex);
    p.curves.push_back(std::move(line));
  }
  return p;
}

bool cone_pol_check(Int n, Int d, std::span<const Int> mus) {
  const auto p = cone_profile(n, d, mus);
  try {
    return pol_one_dim(p).pol == 0;
  } catch (const InconsistentProfile&) {
    return false;
  }
}

bool semicontinuity_expectation(Int pol_special, Int pol_nearby) { return pol_nearby >= pol_special; }

}  // namespace polardeg
