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

#include "polardeg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polardeg/error.hpp"

namespace polardeg {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) {
    throw DomainError("variable index " + std::to_string(index) + " out of range for " +
                      std::to_string(nvars) + " variables");
  }
  std::vector<unsigned> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw DomainError("monomial variable count mismatch");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, index), 1);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear_form(std::span<const Rational> coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
  }
  return p;
}

unsigned Polynomial::degree() const {
  // Graded order puts the highest total degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool Polynomial::is_homogeneous() const {
  const unsigned d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) {
    throw DomainError("monomial has " + std::to_string(m.nvars()) + " variables, polynomial has " +
                      std::to_string(nvars_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (other.nvars_ != nvars_) {
    throw DomainError("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                      std::to_string(other.nvars_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= nvars_) throw DomainError("derivative index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[index];
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[index] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(nvars_));
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial pow(const Polynomial& f, unsigned exponent) {
  Polynomial result = Polynomial::constant(f.nvars(), 1);
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) {
    throw DomainError("substitution needs one image per variable");
  }
  if (images.empty()) return f;
  const std::size_t m = images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != m) throw DomainError("substitution images live in different rings");
  }
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(m, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial out(m);
  for (const auto& [mono, c] : f.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (mono[i] > 0) term *= power_of(i, mono[i]);
    }
    out += term;
  }
  return out;
}

Polynomial substitute_affine_chart(const Polynomial& f, std::size_t index) {
  std::vector<Rational> form(f.nvars(), 0);
  if (index >= form.size()) throw DomainError("chart index out of range");
  form[index] = 1;
  return substitute_affine_chart(f, form);
}

Polynomial substitute_affine_chart(const Polynomial& f, std::span<const Rational> form) {
  const std::size_t n = f.nvars();
  if (form.size() != n) throw DomainError("chart form has the wrong number of coefficients");
  if (n == 0) throw DomainError("chart of a polynomial without variables");
  const auto pivot_it = std::find_if(form.begin(), form.end(), [](const Rational& a) { return a != 0; });
  if (pivot_it == form.end()) throw DomainError("chart form is zero");
  const std::size_t pivot = static_cast<std::size_t>(pivot_it - form.begin());

  // New variables are the old ones with the pivot removed.
  std::vector<Polynomial> images;
  images.reserve(n);
  Polynomial pivot_image = Polynomial::constant(n - 1, Rational(1) / form[pivot]);
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (i == pivot) continue;
    if (form[i] != 0) {
      pivot_image -= Polynomial::variable(n - 1, j) * (form[i] / form[pivot]);
    }
    ++j;
  }
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (i == pivot) {
      images.push_back(pivot_image);
    } else {
      images.push_back(Polynomial::variable(n - 1, j++));
    }
  }
  return substitute(f, images);
}

Polynomial restrict_to_hyperplane(const Polynomial& f, std::span<const Rational> coeffs) {
  const std::size_t n = f.nvars();
  if (n < 2) throw DomainError("hyperplane restriction needs at least two variables");
  if (coeffs.size() != n - 1) throw DomainError("hyperplane needs nvars-1 coefficients");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(Polynomial::variable(n - 1, i));
  images.push_back(Polynomial::linear_form(coeffs));
  return substitute(f, images);
}

Polynomial deform(const Polynomial& f, const Polynomial& l, unsigned d, const Rational& s) {
  if (l.nvars() != f.nvars()) throw DomainError("deformation form lives in a different ring");
  if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous()) {
    throw DomainError("deformation form must be a nonzero homogeneous linear form");
  }
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != d)) {
    throw DomainError("degree mismatch: l^" + std::to_string(d) + " has degree " + std::to_string(d) +
                      " but f has degree " + std::to_string(f.degree()));
  }
  return f + pow(l, d) * s;
}

}  // namespace polardeg
