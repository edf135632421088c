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

#include <complex>
#include <cstdint>
#include <vector>

#include "polardeg/complex_poly.hpp"
#include "polardeg/polynomial.hpp"

namespace polardeg::oracle {

/// The square system whose regular solutions are the points of a generic
/// fibre of the gradient map of f.
///
/// After a seeded rational change of coordinates g(x) = f(M x), the
/// equations are
///
///   b0 * dg/dx_i - b_i * dg/dx0 = 0,   i = 1..n,
///
/// homogeneous of degree d-1 in x0..xn, read on the affine chart
/// chart . x = 1 (n unknowns after eliminating one coordinate). Since b0 is
/// nonzero, any solution either has grad g parallel to b or lies on Sing V.
struct FiberSystem {
  Polynomial source;                          // f as given
  std::vector<std::vector<Rational>> rotation; // M, row-major (n+1)x(n+1)
  Polynomial rotated;                         // g = f(M x)
  std::vector<std::complex<double>> target;   // b, n+1 entries, |b_i| in [0.5, 1.5]
  std::vector<std::complex<double>> chart;    // linear form of the affine chart
  unsigned degree = 0;                        // d

  std::size_t affine_unknowns() const { return source.nvars() - 1; }
  std::size_t homogeneous_unknowns() const { return source.nvars(); }
  /// (d-1)^n, the number of paths of the total-degree homotopy.
  std::size_t bezout() const;
  std::vector<unsigned> equation_degrees() const;

  /// The n cross-product equations in x0..xn, each scaled to unit
  /// coefficient norm.
  template <class T>
  ComplexSystem<T> equations() const;

  /// The same equations on the chart x0 = 1, in the n unknowns x1..xn.
  template <class T>
  ComplexSystem<T> affine_equations() const;

  /// Partial derivatives of g, jointly scaled so the largest coefficient
  /// norm is 1.
  template <class T>
  ComplexSystem<T> gradient() const;
};

/// Throws DomainError when f is zero, not homogeneous, or has degree < 2.
FiberSystem build_fiber_system(const Polynomial& f, std::uint64_t seed);

extern template ComplexSystem<double> FiberSystem::equations<double>() const;
extern template ComplexSystem<long double> FiberSystem::equations<long double>() const;
extern template ComplexSystem<double> FiberSystem::affine_equations<double>() const;
extern template ComplexSystem<long double> FiberSystem::affine_equations<long double>() const;
extern template ComplexSystem<double> FiberSystem::gradient<double>() const;
extern template ComplexSystem<long double> FiberSystem::gradient<long double>() const;

/// Seed for an independent random stream derived from (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace polardeg::oracle
