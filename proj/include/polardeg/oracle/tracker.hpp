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
#include <string_view>
#include <vector>

#include "polardeg/complex_poly.hpp"
#include "polardeg/oracle/config.hpp"

namespace polardeg::oracle {

enum class TrackStatus { regular, diverged, singular_endpoint, on_singular_locus, step_failure };

inline constexpr TrackStatus kAllStatuses[] = {TrackStatus::regular, TrackStatus::diverged,
                                               TrackStatus::singular_endpoint,
                                               TrackStatus::on_singular_locus, TrackStatus::step_failure};

std::string_view to_string(TrackStatus s);

struct TrackResult {
  TrackStatus status = TrackStatus::step_failure;
  /// Homogeneous endpoint scaled so its largest coordinate is 1 in modulus.
  std::vector<std::complex<double>> endpoint;
  double residual = 0.0;        // max scaled |F_i| at the endpoint
  double condition = 0.0;       // Jacobian condition estimate (0 if not computed)
  double grad_norm = 0.0;       // max scaled |dg/dx_j| at the endpoint
  double t_reached = 0.0;
  int steps = 0;
  int retries = 0;
};

/// H(X, t) = (1 - t) * gamma * G(X) + t * F(X) together with the chart
/// equation chart . X = 1, in homogeneous unknowns X = (x0..xn).
///
/// G_i = x_{i+1}^{d_i} - r_i * x0^{d_i} is the homogenized start system.
template <class T>
struct Homotopy {
  using Scalar = std::complex<T>;

  ComplexSystem<T> target;          // n homogeneous equations in n+1 unknowns
  ComplexSystem<T> gradient;        // n+1 partials of the hypersurface equation
  std::vector<unsigned> start_degrees;
  std::vector<Scalar> start_constants;
  std::vector<Scalar> chart;
  Scalar gamma;

  std::size_t unknowns() const { return chart.size(); }

  /// values has n+1 entries, jac is (n+1)x(n+1) row-major, dt has n+1.
  void evaluate(std::span<const Scalar> x, T t, std::span<Scalar> values, std::span<Scalar> jac,
                std::span<Scalar> dt) const;

  /// Homogeneous lift of an affine start root onto the chart.
  std::vector<Scalar> lift(const ComplexPoint& affine_root) const;
};

/// Tracks one path from t = 0 to t = 1 and classifies its endpoint.
template <class T>
TrackResult track_path(const Homotopy<T>& h, const ComplexPoint& start_root, const TrackerConfig& cfg);

/// Largest coordinate distance between two endpoints after scaling both by
/// the same coordinate.
double projective_distance(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b);

extern template struct Homotopy<double>;
extern template struct Homotopy<long double>;
extern template TrackResult track_path<double>(const Homotopy<double>&, const ComplexPoint&,
                                               const TrackerConfig&);
extern template TrackResult track_path<long double>(const Homotopy<long double>&, const ComplexPoint&,
                                                    const TrackerConfig&);

}  // namespace polardeg::oracle
