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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "polardeg/polynomial.hpp"

namespace polardeg {

/// A point with finite complex coordinates.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  /// Throws DomainError if a coordinate is NaN or infinite.
  explicit ComplexPoint(std::vector<std::complex<double>> coords);
  ComplexPoint(std::initializer_list<std::complex<double>> coords)
      : ComplexPoint(std::vector<std::complex<double>>(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const std::complex<double>& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::complex<double>> coords() const noexcept { return coords_; }

 private:
  std::vector<std::complex<double>> coords_;
};

/// Rounds an exact rational to the nearest value representable in T.
template <class T>
T to_real(const Rational& q);

/// Polynomial with complex floating-point coefficients, stored as a flat
/// term list for fast evaluation.
template <class T>
class ComplexPolynomial {
 public:
  using Scalar = std::complex<T>;
  struct Term {
    Scalar coeff;
    std::vector<unsigned> exps;
  };

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Lowering of an exact polynomial, optionally scaled by `scale`.
  static ComplexPolynomial lower(const Polynomial& f, Scalar scale = Scalar(1));
  /// sum_k weights[k] * parts[k]; parts must share the variable count.
  static ComplexPolynomial combine(std::span<const Scalar> weights,
                                   std::span<const ComplexPolynomial> parts);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  unsigned degree() const noexcept;
  /// Sum of coefficient magnitudes; bounds |p| on the closed unit polydisc.
  T coefficient_norm() const;

  Scalar evaluate(std::span<const Scalar> x) const;
  /// Value and gradient at x. `grad` must have nvars() entries.
  Scalar evaluate(std::span<const Scalar> x, std::span<Scalar> grad) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// A list of complex polynomials in a common set of unknowns.
template <class T>
class ComplexSystem {
 public:
  using Scalar = std::complex<T>;

  ComplexSystem() = default;
  explicit ComplexSystem(std::vector<ComplexPolynomial<T>> equations);

  std::size_t size() const noexcept { return equations_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  const ComplexPolynomial<T>& operator[](std::size_t i) const { return equations_[i]; }
  const std::vector<ComplexPolynomial<T>>& equations() const noexcept { return equations_; }

  /// values[i] = f_i(x); jacobian is row-major size() x nvars().
  void evaluate(std::span<const Scalar> x, std::span<Scalar> values, std::span<Scalar> jacobian) const;
  void evaluate(std::span<const Scalar> x, std::span<Scalar> values) const;

 private:
  std::vector<ComplexPolynomial<T>> equations_;
  std::size_t nvars_ = 0;
};

/// f evaluated at p in double precision.
std::complex<double> evaluate_complex(const Polynomial& f, const ComplexPoint& p);

/// Jacobian of a polynomial system at p, row-major (equations x variables).
std::vector<std::complex<double>> evaluate_jacobian(std::span<const Polynomial> system, const ComplexPoint& p);

extern template class ComplexPolynomial<double>;
extern template class ComplexPolynomial<long double>;
extern template class ComplexSystem<double>;
extern template class ComplexSystem<long double>;

}  // namespace polardeg
