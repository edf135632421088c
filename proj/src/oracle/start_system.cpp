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

#include "polardeg/oracle/start_system.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "polardeg/error.hpp"

namespace polardeg::oracle {

std::size_t StartSystem::root_count() const {
  std::size_t count = 1;
  for (unsigned d : degrees) count *= d;
  return count;
}

ComplexPoint StartSystem::root(std::size_t index) const {
  if (index >= root_count()) throw DomainError("start root index out of range");
  std::vector<std::complex<double>> x(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const unsigned d = degrees[i];
    const std::size_t k = index % d;
    index /= d;
    const double radius = std::pow(std::abs(constants[i]), 1.0 / d);
    const double angle = (std::arg(constants[i]) + 2.0 * std::numbers::pi * static_cast<double>(k)) / d;
    x[i] = std::polar(radius, angle);
  }
  return ComplexPoint(std::move(x));
}

std::vector<ComplexPoint> StartSystem::roots() const {
  std::vector<ComplexPoint> out;
  out.reserve(root_count());
  for (std::size_t k = 0; k < root_count(); ++k) out.push_back(root(k));
  return out;
}

ComplexSystem<double> StartSystem::equations() const {
  const std::size_t n = degrees.size();
  std::vector<ComplexPolynomial<double>> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial mono = Polynomial::monomial(Monomial::variable(n, i, degrees[i]), 1);
    Polynomial one = Polynomial::constant(n, 1);
    const std::vector<ComplexPolynomial<double>> parts{ComplexPolynomial<double>::lower(mono),
                                                       ComplexPolynomial<double>::lower(one)};
    const std::vector<std::complex<double>> weights{1.0, -constants[i]};
    eqs.push_back(ComplexPolynomial<double>::combine(weights, parts));
  }
  return ComplexSystem<double>(std::move(eqs));
}

StartSystem make_start_system(const std::vector<unsigned>& degrees, std::uint64_t seed) {
  for (unsigned d : degrees) {
    if (d < 1) throw DomainError("start system degrees must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  StartSystem s;
  s.degrees = degrees;
  for (std::size_t i = 0; i < degrees.size(); ++i) s.constants.push_back(std::polar(1.0, angle(rng)));
  return s;
}

}  // namespace polardeg::oracle
