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

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace polardeg {

using Rational = mpq_class;

/// Exponent vector of a monomial in the variables x0..x{nvars-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }
  unsigned total_degree() const noexcept;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order, largest first: higher total degree comes
/// first, ties broken by comparing exponents of x0, x1, ... (larger first).
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so two polynomials are
/// equal exactly when their term maps are equal. Iteration order is the
/// canonical printing order (graded lex, descending).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexOrder>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear_form(std::span<const Rational> coeffs);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Maximum total degree; 0 for the zero polynomial.
  unsigned degree() const;
  /// True iff every term has total degree degree(). The zero polynomial
  /// is homogeneous.
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  /// Adds c * m, keeping the map canonical.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial derivative(std::size_t index) const;
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void check_same_ring(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& f, unsigned exponent);

/// (df/dx0, ..., df/dx{nvars-1}).
std::vector<Polynomial> gradient(const Polynomial& f);

/// Replaces x_i by images[i]; all images must live in the same ring, which
/// becomes the ring of the result.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Affine chart x_index = 1; the variable is dropped and the remaining ones
/// are renumbered in order.
Polynomial substitute_affine_chart(const Polynomial& f, std::size_t index);

/// Affine chart given by a linear form: sum_i form[i] * x_i = 1. The first
/// variable with a nonzero coefficient is eliminated and dropped.
Polynomial substitute_affine_chart(const Polynomial& f, std::span<const Rational> form);

/// Restriction to the hyperplane x_last = sum_{i<last} coeffs[i] * x_i,
/// as a polynomial in the first nvars-1 variables.
Polynomial restrict_to_hyperplane(const Polynomial& f, std::span<const Rational> coeffs);

/// f + s * l^d. Requires l homogeneous linear and, for nonzero f, f
/// homogeneous of degree d.
Polynomial deform(const Polynomial& f, const Polynomial& l, unsigned d, const Rational& s);

}  // namespace polardeg
