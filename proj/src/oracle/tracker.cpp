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

#include "polardeg/oracle/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "polardeg/error.hpp"

namespace polardeg::oracle {

std::string_view to_string(TrackStatus s) {
  switch (s) {
    case TrackStatus::regular: return "regular";
    case TrackStatus::diverged: return "diverged";
    case TrackStatus::singular_endpoint: return "singular_endpoint";
    case TrackStatus::on_singular_locus: return "on_singular_locus";
    case TrackStatus::step_failure: return "step_failure";
  }
  return "unknown";
}

template <class T>
void Homotopy<T>::evaluate(std::span<const Scalar> x, T t, std::span<Scalar> values, std::span<Scalar> jac,
                           std::span<Scalar> dt) const {
  const std::size_t n = target.size();
  const std::size_t nv = unknowns();
  std::vector<Scalar> fv(n), fj(n * nv);
  target.evaluate(x, fv, fj);

  const Scalar s = (T(1) - t) * gamma;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned d = start_degrees[i];
    const Scalar xi = x[i + 1];
    const Scalar x0 = x[0];
    const Scalar xi_pow = std::pow(xi, static_cast<int>(d));
    const Scalar x0_pow = std::pow(x0, static_cast<int>(d));
    const Scalar g = xi_pow - start_constants[i] * x0_pow;
    const Scalar dg_i = T(d) * std::pow(xi, static_cast<int>(d) - 1);
    const Scalar dg_0 = -start_constants[i] * T(d) * std::pow(x0, static_cast<int>(d) - 1);

    values[i] = s * g + t * fv[i];
    dt[i] = fv[i] - gamma * g;
    for (std::size_t j = 0; j < nv; ++j) jac[i * nv + j] = t * fj[i * nv + j];
    jac[i * nv + 0] += s * dg_0;
    jac[i * nv + i + 1] += s * dg_i;
  }
  Scalar c = Scalar(-1);
  for (std::size_t j = 0; j < nv; ++j) {
    c += chart[j] * x[j];
    jac[n * nv + j] = chart[j];
  }
  values[n] = c;
  dt[n] = Scalar(0);
}

template <class T>
std::vector<typename Homotopy<T>::Scalar> Homotopy<T>::lift(const ComplexPoint& affine_root) const {
  if (affine_root.size() + 1 != unknowns()) throw DomainError("start root has the wrong number of coordinates");
  std::vector<Scalar> x(unknowns());
  x[0] = Scalar(1);
  for (std::size_t i = 0; i < affine_root.size(); ++i) {
    x[i + 1] = Scalar(static_cast<T>(affine_root[i].real()), static_cast<T>(affine_root[i].imag()));
  }
  Scalar c(0);
  for (std::size_t j = 0; j < x.size(); ++j) c += chart[j] * x[j];
  for (auto& v : x) v /= c;
  return x;
}

namespace {

template <class T>
class Tracker {
 public:
  using Scalar = std::complex<T>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Tracker(const Homotopy<T>& h, const TrackerConfig& cfg)
      : h_(h), cfg_(cfg), nv_(h.unknowns()), values_(nv_), jac_(nv_, nv_), dt_(nv_) {
    corrector_tol_ = std::max(T(1e-11), T(1e8) * std::numeric_limits<T>::epsilon());
  }

  TrackResult run(std::vector<Scalar> x, double step_scale) {
    TrackResult r;
    Vector X = Eigen::Map<Vector>(x.data(), static_cast<Eigen::Index>(x.size()));
    T t = 0;
    T h = static_cast<T>(cfg_.initial_step * step_scale);
    const T max_h = static_cast<T>(cfg_.max_step * step_scale);
    const T min_h = static_cast<T>(cfg_.min_step);
    int successes = 0;
    bool failed = false;

    while (t < T(1)) {
      if (r.steps >= cfg_.max_steps) {
        failed = true;
        break;
      }
      ++r.steps;
      h = std::min(h, T(1) - t);
      T t1 = t + h;
      if (T(1) - t1 < min_h) t1 = T(1);

      Vector Xp = X;
      bool ok = predict(Xp, t, t1 - t) && correct(Xp, t1, 3);
      if (ok) {
        X = Xp;
        t = t1;
        if (++successes >= 3) {
          h = std::min(T(2) * h, max_h);
          successes = 0;
        }
        if (X.cwiseAbs().maxCoeff() > T(cfg_.divergence_bound)) {
          r.status = TrackStatus::diverged;
          r.t_reached = static_cast<double>(t);
          r.endpoint = normalized(X);
          return r;
        }
      } else {
        h /= T(2);
        successes = 0;
        if (h < min_h) {
          failed = true;
          break;
        }
      }
    }
    r.t_reached = static_cast<double>(t);
    if (!X.allFinite()) {
      r.status = TrackStatus::diverged;
      return r;
    }
    if (X.cwiseAbs().maxCoeff() > T(cfg_.divergence_bound)) {
      r.status = TrackStatus::diverged;
      r.endpoint = normalized(X);
      return r;
    }

    if (!failed) polish(X);
    classify(X, failed, r);
    return r;
  }

 private:
  bool eval(const Vector& X, T t) {
    std::span<const Scalar> xs(X.data(), nv_);
    h_.evaluate(xs, t, std::span<Scalar>(values_.data(), nv_), std::span<Scalar>(jac_.data(), nv_ * nv_),
                std::span<Scalar>(dt_.data(), nv_));
    return values_.allFinite() && jac_.allFinite() && dt_.allFinite();
  }

  bool solve(const Vector& rhs, Vector& out) {
    Eigen::PartialPivLU<Matrix> lu(jac_);
    out = lu.solve(rhs);
    return out.allFinite();
  }

  // Euler step along dX/dt = -H_X^{-1} H_t.
  bool predict(Vector& X, T t, T dt) {
    if (!eval(X, t)) return false;
    Vector dx;
    if (!solve(-dt_, dx)) return false;
    X += dt * dx;
    return X.allFinite();
  }

  bool correct(Vector& X, T t, int iterations) {
    T previous = std::numeric_limits<T>::infinity();
    for (int k = 0; k < iterations; ++k) {
      if (!eval(X, t)) return false;
      Vector delta;
      if (!solve(values_, delta)) return false;
      X -= delta;
      const T size = delta.cwiseAbs().maxCoeff();
      const T scale = T(1) + X.cwiseAbs().maxCoeff();
      if (k == 0 && size > T(0.1) * scale) return false;
      if (k > 0 && size > T(0.5) * previous && size > corrector_tol_ * scale) return false;
      if (size <= corrector_tol_ * scale) return true;
      previous = size;
    }
    return false;
  }

  void polish(Vector& X) {
    const T eps = std::numeric_limits<T>::epsilon();
    for (int k = 0; k < 6; ++k) {
      if (!eval(X, T(1))) return;
      Vector delta;
      if (!solve(values_, delta)) return;
      Vector next = X - delta;
      if (!next.allFinite()) return;
      X = next;
      if (delta.cwiseAbs().maxCoeff() <= T(10) * eps * (T(1) + X.cwiseAbs().maxCoeff())) return;
    }
  }

  static std::vector<std::complex<double>> normalized(const Vector& X) {
    Eigen::Index at = 0;
    X.cwiseAbs().maxCoeff(&at);
    const Scalar pivot = X(at);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(X.size()));
    for (Eigen::Index i = 0; i < X.size(); ++i) {
      const Scalar v = pivot == Scalar(0) ? X(i) : X(i) / pivot;
      out[static_cast<std::size_t>(i)] = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    return out;
  }

  void classify(const Vector& X, bool failed, TrackResult& r) {
    // Scale to the largest coordinate; all equations are homogeneous.
    Eigen::Index at = 0;
    X.cwiseAbs().maxCoeff(&at);
    const Vector Xn = X / X(at);
    r.endpoint = normalized(X);
    std::span<const Scalar> xs(Xn.data(), nv_);

    std::vector<Scalar> grad(nv_);
    h_.gradient.evaluate(xs, grad);
    T gnorm = 0;
    for (const auto& g : grad) gnorm = std::max(gnorm, std::abs(g));
    r.grad_norm = static_cast<double>(gnorm);

    const std::size_t n = h_.target.size();
    std::vector<Scalar> fv(n), fj(n * nv_);
    h_.target.evaluate(xs, fv, fj);
    T residual = 0;
    for (const auto& v : fv) residual = std::max(residual, std::abs(v));
    r.residual = static_cast<double>(residual);

    const bool small_gradient = gnorm < T(cfg_.singular_grad_tol);
    if (failed) {
      if (small_gradient) {
        r.status = TrackStatus::on_singular_locus;
      } else {
        r.status = r.t_reached >= 0.999 ? TrackStatus::singular_endpoint : TrackStatus::step_failure;
      }
      return;
    }

    // Projective condition: Jacobian rows plus the conjugate point, which
    // fixes the scaling direction independently of the chart.
    Matrix J(nv_, nv_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < nv_; ++j) J(i, j) = fj[i * nv_ + j];
    }
    for (std::size_t j = 0; j < nv_; ++j) J(n, j) = std::conj(Xn(j));
    Eigen::JacobiSVD<Matrix> svd(J);
    const auto& sv = svd.singularValues();
    const T smallest = sv(sv.size() - 1);
    const T cond = smallest > T(0) ? sv(0) / smallest : std::numeric_limits<T>::infinity();
    r.condition = static_cast<double>(cond);

    const bool converged = residual < T(cfg_.newton_tol) && cond < T(cfg_.max_condition);
    // A gradient at rounding level is a point of Sing V; above that, the
    // endpoint must also be near a singular point to be discarded.
    const bool vanishing_gradient = gnorm <= rounding_gradient();
    if (small_gradient &&
        (!converged || vanishing_gradient || distance_to_singular_locus(X) < cfg_.dedup_tol)) {
      r.status = TrackStatus::on_singular_locus;
    } else {
      r.status = converged ? TrackStatus::regular : TrackStatus::singular_endpoint;
    }
  }

  static T rounding_gradient() { return T(1e4) * std::numeric_limits<T>::epsilon(); }

  // A well-conditioned fibre point can sit close to Sing V, where |grad g|
  // is small without vanishing. Gauss-Newton on grad g = 0 (plus the chart)
  // finds the nearest singular point; infinity if it does not converge.
  double distance_to_singular_locus(const Vector& X) const {
    const T eps = std::numeric_limits<T>::epsilon();
    Vector Y = X;
    std::vector<Scalar> grad(nv_), hess(nv_ * nv_);
    Matrix A(nv_ + 1, nv_);
    Vector rhs(nv_ + 1);
    for (int k = 0; k < 60; ++k) {
      h_.gradient.evaluate(std::span<const Scalar>(Y.data(), nv_), grad, hess);
      Scalar c(-1);
      for (std::size_t i = 0; i < nv_; ++i) {
        rhs(i) = grad[i];
        for (std::size_t j = 0; j < nv_; ++j) A(i, j) = hess[i * nv_ + j];
        A(nv_, i) = h_.chart[i];
        c += h_.chart[i] * Y(i);
      }
      rhs(nv_) = c;
      const Vector delta = A.completeOrthogonalDecomposition().solve(rhs);
      if (!delta.allFinite()) return std::numeric_limits<double>::infinity();
      Y -= delta;
      if (delta.cwiseAbs().maxCoeff() <= T(100) * eps * (T(1) + Y.cwiseAbs().maxCoeff())) break;
    }
    // Degenerate singular points only allow ~sqrt(eps) accuracy in Y, but
    // the gradient there still drops to rounding level.
    Eigen::Index at = 0;
    Y.cwiseAbs().maxCoeff(&at);
    const Vector Yn = Y / Y(at);
    h_.gradient.evaluate(std::span<const Scalar>(Yn.data(), nv_), grad);
    T gnorm = 0;
    for (const auto& g : grad) gnorm = std::max(gnorm, std::abs(g));
    if (!(gnorm <= rounding_gradient())) return std::numeric_limits<double>::infinity();
    return projective_distance(normalized(X), normalized(Y));
  }

  const Homotopy<T>& h_;
  const TrackerConfig& cfg_;
  std::size_t nv_;
  Vector values_;
  Matrix jac_;
  Vector dt_;
  T corrector_tol_;
};

}  // namespace

template <class T>
TrackResult track_path(const Homotopy<T>& h, const ComplexPoint& start_root, const TrackerConfig& cfg) {
  const auto x0 = h.lift(start_root);
  Tracker<T> tracker(h, cfg);
  TrackResult r;
  double scale = 1.0;
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    const int steps_before = r.steps;
    r = tracker.run(x0, scale);
    r.steps += steps_before;
    r.retries = attempt;
    if (r.status != TrackStatus::step_failure || r.t_reached >= 0.999) break;
    scale /= 4.0;
  }
  return r;
}

double projective_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size() || a.empty()) return std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (std::abs(a[i]) > std::abs(a[at])) at = i;
  }
  if (std::abs(b[at]) == 0.0 || std::abs(a[at]) == 0.0) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] / a[at] - b[i] / b[at]));
  }
  return worst;
}

template struct Homotopy<double>;
template struct Homotopy<long double>;
template TrackResult track_path<double>(const Homotopy<double>&, const ComplexPoint&, const TrackerConfig&);
template TrackResult track_path<long double>(const Homotopy<long double>&, const ComplexPoint&,
                                             const TrackerConfig&);

}  // namespace polardeg::oracle
