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

#include "polardeg/oracle/fiber_system.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "polardeg/error.hpp"
#include "polardeg/formula.hpp"
#include "polardeg/oracle/config.hpp"

namespace polardeg::oracle {

std::string_view to_string(Precision p) {
  return p == Precision::extended ? "extended" : "double";
}

void TrackerConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw DomainError(std::string("tracker config: ") + name + " must be positive");
  };
  positive(newton_tol, "newton_tol");
  positive(dedup_tol, "dedup_tol");
  positive(divergence_bound, "divergence_bound");
  positive(min_step, "min_step");
  positive(singular_grad_tol, "singular_grad_tol");
  positive(max_condition, "max_condition");
  positive(initial_step, "initial_step");
  positive(max_step, "max_step");
  if (trials < 1 || trials % 2 == 0) throw DomainError("tracker config: trials must be odd and positive");
  if (max_steps < 1) throw DomainError("tracker config: max_steps must be positive");
  if (retries < 0) throw DomainError("tracker config: retries must be non-negative");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

bool invertible(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return true;
}

std::complex<double> random_unit_annulus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(radius(rng), angle(rng));
}

template <class T>
std::complex<T> lift(std::complex<double> z) {
  return {static_cast<T>(z.real()), static_cast<T>(z.imag())};
}

}  // namespace

std::size_t FiberSystem::bezout() const {
  return static_cast<std::size_t>(bezout_number(static_cast<Int>(affine_unknowns()), degree));
}

std::vector<unsigned> FiberSystem::equation_degrees() const {
  return std::vector<unsigned>(affine_unknowns(), degree - 1);
}

namespace {

template <class T>
ComplexSystem<T> cross_products(const FiberSystem& fs, bool affine) {
  const std::size_t n = fs.affine_unknowns();
  auto prepare = [&](std::size_t i) {
    Polynomial p = fs.rotated.derivative(i);
    return ComplexPolynomial<T>::lower(affine ? substitute_affine_chart(p, 0) : p);
  };
  const auto low0 = prepare(0);
  const auto& target = fs.target;
  std::vector<ComplexPolynomial<T>> eqs;
  eqs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::vector<ComplexPolynomial<T>> parts{prepare(i), low0};
    const std::vector<std::complex<T>> weights{lift<T>(target[0]), -lift<T>(target[i])};
    auto eq = ComplexPolynomial<T>::combine(weights, parts);
    const T norm = eq.coefficient_norm();
    if (norm > T(0)) {
      const std::vector<ComplexPolynomial<T>> one{eq};
      const std::vector<std::complex<T>> scale{std::complex<T>(T(1) / norm)};
      eq = ComplexPolynomial<T>::combine(scale, one);
    }
    eqs.push_back(std::move(eq));
  }
  return ComplexSystem<T>(std::move(eqs));
}

}  // namespace

template <class T>
ComplexSystem<T> FiberSystem::equations() const {
  return cross_products<T>(*this, false);
}

template <class T>
ComplexSystem<T> FiberSystem::affine_equations() const {
  return cross_products<T>(*this, true);
}

template <class T>
ComplexSystem<T> FiberSystem::gradient() const {
  std::vector<ComplexPolynomial<T>> parts;
  T largest = 0;
  for (const auto& g : polardeg::gradient(rotated)) {
    parts.push_back(ComplexPolynomial<T>::lower(g));
    largest = std::max(largest, parts.back().coefficient_norm());
  }
  if (largest > T(0)) {
    for (auto& p : parts) {
      const std::vector<ComplexPolynomial<T>> one{p};
      const std::vector<std::complex<T>> scale{std::complex<T>(T(1) / largest)};
      p = ComplexPolynomial<T>::combine(scale, one);
    }
  }
  return ComplexSystem<T>(std::move(parts));
}

template ComplexSystem<double> FiberSystem::equations<double>() const;
template ComplexSystem<long double> FiberSystem::equations<long double>() const;
template ComplexSystem<double> FiberSystem::affine_equations<double>() const;
template ComplexSystem<long double> FiberSystem::affine_equations<long double>() const;
template ComplexSystem<double> FiberSystem::gradient<double>() const;
template ComplexSystem<long double> FiberSystem::gradient<long double>() const;

FiberSystem build_fiber_system(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("fiber system of the zero polynomial");
  if (!f.is_homogeneous()) throw DomainError("fiber system needs a homogeneous polynomial");
  if (f.degree() < 2) throw DomainError("gradient map of a degree < 2 polynomial has no degree to count");
  if (f.nvars() < 2) throw DomainError("fiber system needs at least two homogeneous variables");

  std::mt19937_64 rng(seed);
  const std::size_t nv = f.nvars();
  FiberSystem fs;
  fs.source = f;
  fs.degree = f.degree();

  // Small-integer coordinate change, redrawn until invertible.
  std::uniform_int_distribution<int> entry(-2, 2);
  do {
    fs.rotation.assign(nv, std::vector<Rational>(nv));
    for (auto& row : fs.rotation) {
      for (auto& e : row) e = entry(rng);
    }
  } while (!invertible(fs.rotation));

  std::vector<Polynomial> images;
  images.reserve(nv);
  for (const auto& row : fs.rotation) images.push_back(Polynomial::linear_form(row));
  fs.rotated = substitute(f, images);

  for (std::size_t i = 0; i < nv; ++i) fs.target.push_back(random_unit_annulus(rng));
  for (std::size_t i = 0; i < nv; ++i) fs.chart.push_back(random_unit_annulus(rng));
  return fs;
}

}  // namespace polardeg::oracle
