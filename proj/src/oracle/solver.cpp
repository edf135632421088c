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

#include "polardeg/oracle/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "polardeg/error.hpp"
#include "polardeg/oracle/start_system.hpp"

namespace polardeg::oracle {

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

template <class T>
std::vector<std::complex<T>> lift_all(const std::vector<std::complex<double>>& v) {
  std::vector<std::complex<T>> out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(static_cast<T>(z.real()), static_cast<T>(z.imag()));
  return out;
}

// Runs task(i) for i in [0, count) on up to `workers` threads. Each task
// writes only its own slot, so the schedule cannot change the results.
template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task task) {
  if (workers == 0) workers = default_workers();
  const std::size_t threads = std::min<std::size_t>(workers, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <class T>
std::vector<TrackResult> track_all(const FiberSystem& fs, const StartSystem& start, std::complex<double> gamma,
                                   const TrackerConfig& cfg, unsigned workers) {
  Homotopy<T> h;
  h.target = fs.equations<T>();
  h.gradient = fs.gradient<T>();
  h.start_degrees = start.degrees;
  h.start_constants = lift_all<T>(start.constants);
  h.chart = lift_all<T>(fs.chart);
  h.gamma = {static_cast<T>(gamma.real()), static_cast<T>(gamma.imag())};

  std::vector<TrackResult> results(start.root_count());
  parallel_for(results.size(), workers, [&](std::size_t i) { results[i] = track_path<T>(h, start.root(i), cfg); });
  return results;
}

void check_input(const Polynomial& f, const TrackerConfig& cfg) {
  cfg.validate();
  if (f.is_zero()) throw DomainError("oracle input is the zero polynomial");
  if (!f.is_homogeneous()) throw DomainError("oracle input must be homogeneous");
  if (f.degree() < 2) throw DomainError("oracle input must have degree >= 2");
  if (f.nvars() < 2) throw DomainError("oracle input needs at least two variables");
  const Int n = static_cast<Int>(f.nvars()) - 1;
  Int paths = 1;
  for (Int i = 0; i < n; ++i) {
    paths *= static_cast<Int>(f.degree()) - 1;
    if (paths > static_cast<Int>(cfg.max_paths)) {
      throw BudgetExceeded("(d-1)^n = " + std::to_string(f.degree() - 1) + "^" + std::to_string(n) +
                           " paths exceeds the budget of " + std::to_string(cfg.max_paths));
    }
  }
}

}  // namespace

TrialRun run_trial(const Polynomial& f, const TrackerConfig& cfg, int trial, unsigned workers) {
  check_input(f, cfg);
  TrialRun run;
  run.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  const FiberSystem fs = build_fiber_system(f, derive_seed(run.seed, 0));
  const StartSystem start = make_start_system(fs.equation_degrees(), derive_seed(run.seed, 1));
  std::mt19937_64 rng(derive_seed(run.seed, 2));
  const std::complex<double> gamma =
      std::polar(1.0, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));

  run.paths = cfg.precision == Precision::extended ? track_all<long double>(fs, start, gamma, cfg, workers)
                                                   : track_all<double>(fs, start, gamma, cfg, workers);

  std::vector<const TrackResult*> distinct;
  for (const auto& r : run.paths) {
    ++run.statuses[static_cast<std::size_t>(r.status)];
    if (r.status != TrackStatus::regular) continue;
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const TrackResult* q) {
      return projective_distance(q->endpoint, r.endpoint) < cfg.dedup_tol;
    });
    if (seen) {
      ++run.duplicates;
    } else {
      distinct.push_back(&r);
    }
  }
  run.count = static_cast<Int>(distinct.size());
  return run;
}

OracleReport solve_count(const Polynomial& f, const TrackerConfig& cfg, unsigned workers) {
  check_input(f, cfg);
  OracleReport report;
  report.seed = cfg.seed;
  report.precision = cfg.precision;
  report.bezout = bezout_number(static_cast<Int>(f.nvars()) - 1, f.degree());

  std::map<Int, int> votes;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const TrialRun run = run_trial(f, cfg, trial, workers);
    report.per_trial_counts.push_back(run.count);
    report.paths_total += static_cast<Int>(run.paths.size());
    for (std::size_t s = 0; s < run.statuses.size(); ++s) {
      if (static_cast<TrackStatus>(s) != TrackStatus::regular) report.discarded[s] += run.statuses[s];
    }
    report.discarded[static_cast<std::size_t>(TrackStatus::regular)] += run.duplicates;
    ++votes[run.count];
  }

  // Modal count; ties go to the smaller count.
  int best = -1;
  for (const auto& [count, n] : votes) {
    if (n > best) {
      best = n;
      report.pol_estimate = count;
    }
  }
  report.consensus = votes.size() == 1;
  return report;
}

VerifyReport verify(const Polynomial& f, const SingularityProfile& p, const TrackerConfig& cfg, unsigned workers) {
  if (static_cast<Int>(f.nvars()) != p.n + 1 || static_cast<Int>(f.degree()) != p.d) {
    throw DomainError("polynomial and profile disagree on n or d");
  }
  VerifyReport out;
  out.oracle = solve_count(f, cfg, workers);
  try {
    out.formula = pol_one_dim(p);
    out.match = out.formula->pol == out.oracle.pol_estimate;
  } catch (const InconsistentProfile& e) {
    out.formula_error = e.what();
  }
  return out;
}

}  // namespace polardeg::oracle
