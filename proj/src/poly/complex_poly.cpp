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

#include "polardeg/complex_poly.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "polardeg/error.hpp"

namespace polardeg {

ComplexPoint::ComplexPoint(std::vector<std::complex<double>> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("complex point has a non-finite coordinate");
    }
  }
}

template <>
double to_real<double>(const Rational& q) {
  return q.get_d();
}

template <>
long double to_real<long double>(const Rational& q) {
  // mpq_get_d would truncate to 53 bits; go through the decimal expansion
  // of numerator and denominator instead.
  const long double num = std::strtold(q.get_num().get_str().c_str(), nullptr);
  const long double den = std::strtold(q.get_den().get_str().c_str(), nullptr);
  return num / den;
}

template <class T>
ComplexPolynomial<T> ComplexPolynomial<T>::lower(const Polynomial& f, Scalar scale) {
  ComplexPolynomial out(f.nvars());
  out.terms_.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    out.terms_.push_back({scale * to_real<T>(c), m.exponents()});
  }
  return out;
}

template <class T>
ComplexPolynomial<T> ComplexPolynomial<T>::combine(std::span<const Scalar> weights,
                                                   std::span<const ComplexPolynomial> parts) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw DomainError("combine needs one weight per part and at least one part");
  }
  const std::size_t n = parts.front().nvars();
  // Deterministic merge keyed on the exponent vector.
  std::map<std::vector<unsigned>, Scalar> merged;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].nvars() != n) throw DomainError("combine parts live in different rings");
    for (const auto& t : parts[k].terms_) merged[t.exps] += weights[k] * t.coeff;
  }
  ComplexPolynomial out(n);
  for (auto& [e, c] : merged) {
    if (c != Scalar(0)) out.terms_.push_back({c, e});
  }
  return out;
}

template <class T>
unsigned ComplexPolynomial<T>::degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (unsigned e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

template <class T>
T ComplexPolynomial<T>::coefficient_norm() const {
  T s = 0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

namespace {

template <class T>
std::complex<T> ipow(std::complex<T> base, unsigned e) {
  std::complex<T> r(1);
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

}  // namespace

template <class T>
auto ComplexPolynomial<T>::evaluate(std::span<const Scalar> x) const -> Scalar {
  if (x.size() != nvars_) throw DomainError("evaluation point has the wrong dimension");
  Scalar sum(0);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exps[i] != 0) v *= ipow(x[i], t.exps[i]);
    }
    sum += v;
  }
  return sum;
}

template <class T>
auto ComplexPolynomial<T>::evaluate(std::span<const Scalar> x, std::span<Scalar> grad) const -> Scalar {
  if (x.size() != nvars_ || grad.size() != nvars_) {
    throw DomainError("evaluation point has the wrong dimension");
  }
  for (auto& g : grad) g = Scalar(0);
  Scalar sum(0);
  std::vector<Scalar> lower_pow(nvars_);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.exps[i];
      lower_pow[i] = e == 0 ? Scalar(0) : ipow(x[i], e - 1);
      if (e != 0) v *= lower_pow[i] * x[i];
    }
    sum += v;
    for (std::size_t j = 0; j < nvars_; ++j) {
      const unsigned ej = t.exps[j];
      if (ej == 0) continue;
      Scalar d = t.coeff * T(ej) * lower_pow[j];
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (i != j && t.exps[i] != 0) d *= lower_pow[i] * x[i];
      }
      grad[j] += d;
    }
  }
  return sum;
}

template <class T>
ComplexSystem<T>::ComplexSystem(std::vector<ComplexPolynomial<T>> equations) : equations_(std::move(equations)) {
  nvars_ = equations_.empty() ? 0 : equations_.front().nvars();
  for (const auto& e : equations_) {
    if (e.nvars() != nvars_) throw DomainError("system equations live in different rings");
  }
}

template <class T>
void ComplexSystem<T>::evaluate(std::span<const Scalar> x, std::span<Scalar> values,
                                std::span<Scalar> jacobian) const {
  if (values.size() != size() || jacobian.size() != size() * nvars_) {
    throw DomainError("system evaluation buffers have the wrong size");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    values[i] = equations_[i].evaluate(x, jacobian.subspan(i * nvars_, nvars_));
  }
}

template <class T>
void ComplexSystem<T>::evaluate(std::span<const Scalar> x, std::span<Scalar> values) const {
  if (values.size() != size()) throw DomainError("system evaluation buffer has the wrong size");
  for (std::size_t i = 0; i < size(); ++i) values[i] = equations_[i].evaluate(x);
}

template class ComplexPolynomial<double>;
template class ComplexPolynomial<long double>;
template class ComplexSystem<double>;
template class ComplexSystem<long double>;

std::complex<double> evaluate_complex(const Polynomial& f, const ComplexPoint& p) {
  if (p.size() != f.nvars()) {
    throw DomainError("point has " + std::to_string(p.size()) + " coordinates, polynomial has " +
                      std::to_string(f.nvars()) + " variables");
  }
  return ComplexPolynomial<double>::lower(f).evaluate(p.coords());
}

std::vector<std::complex<double>> evaluate_jacobian(std::span<const Polynomial> system, const ComplexPoint& p) {
  std::vector<ComplexPolynomial<double>> eqs;
  eqs.reserve(system.size());
  for (const auto& f : system) {
    if (f.nvars() != p.size()) throw DomainError("point dimension does not match the system");
    eqs.push_back(ComplexPolynomial<double>::lower(f));
  }
  ComplexSystem<double> sys(std::move(eqs));
  std::vector<std::complex<double>> values(sys.size());
  std::vector<std::complex<double>> jac(sys.size() * p.size());
  sys.evaluate(p.coords(), values, jac);
  return jac;
}

}  // namespace polardeg
