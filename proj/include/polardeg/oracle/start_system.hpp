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

namespace polardeg::oracle {

/// Total-degree start system x_i^{d_i} - r_i = 0 with random unit r_i.
struct StartSystem {
  std::vector<unsigned> degrees;
  std::vector<std::complex<double>> constants;

  std::size_t root_count() const;
  /// Root number `index` in mixed radix over the degrees.
  ComplexPoint root(std::size_t index) const;
  std::vector<ComplexPoint> roots() const;
  /// The affine equations, for checking roots.
  ComplexSystem<double> equations() const;
};

StartSystem make_start_system(const std::vector<unsigned>& degrees, std::uint64_t seed);

}  // namespace polardeg::oracle
