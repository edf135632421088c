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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "polardeg/error.hpp"
#include "polardeg/parse.hpp"
#include "polardeg/oracle/report_json.hpp"
#include "polardeg/oracle/solver.hpp"
#include "polardeg/oracle/start_system.hpp"
#include "support/fixtures.hpp"
#include "support/random_poly.hpp"

using namespace polardeg;
using namespace polardeg::oracle;
using namespace polardeg::testing;

namespace {

Polynomial cubic(const char* text) { return parse(text, 4); }

Int count(const Polynomial& f, std::uint64_t seed = 42) {
  TrackerConfig cfg;
  cfg.seed = seed;
  const OracleReport r = solve_count(f, cfg);
  EXPECT_TRUE(r.consensus) << to_string(f) << " seed " << seed << " counts " << ::testing::PrintToString(r.per_trial_counts);
  EXPECT_LE(r.pol_estimate, r.bezout);
  return r.pol_estimate;
}

}  // namespace

TEST(FiberSystem, FermatShape) {
  const FiberSystem fs = build_fiber_system(cubic("x0^3+x1^3+x2^3+x3^3"), 7);
  EXPECT_EQ(fs.bezout(), 8u);
  const auto eqs = fs.affine_equations<double>();
  ASSERT_EQ(eqs.size(), 3u);
  EXPECT_EQ(eqs.nvars(), 3u);
  for (const auto& e : eqs.equations()) EXPECT_LE(e.degree(), 2u);
  EXPECT_EQ(fs.equations<double>().nvars(), 4u);
  for (const auto& b : fs.target) {
    EXPECT_GE(std::abs(b), 0.5);
    EXPECT_LE(std::abs(b), 1.5);
  }
}

TEST(FiberSystem, E1Shape) {
  const FiberSystem fs = build_fiber_system(cubic("x0^2*x2+x1^2*x3"), 7);
  EXPECT_EQ(fs.bezout(), 8u);
  EXPECT_EQ(fs.equation_degrees(), (std::vector<unsigned>{2, 2, 2}));
}

TEST(FiberSystem, RejectsBadInput) {
  EXPECT_THROW(build_fiber_system(cubic("x0+x1"), 1), DomainError);
  EXPECT_THROW(build_fiber_system(Polynomial(4), 1), DomainError);
  EXPECT_THROW(build_fiber_system(cubic("x0^3+x1"), 1), DomainError);
}

TEST(FiberSystem, SeedDeterminesSystem) {
  const Polynomial f = cubic("x0^2*x2+x1^2*x3");
  const FiberSystem a = build_fiber_system(f, 11), b = build_fiber_system(f, 11), c = build_fiber_system(f, 12);
  EXPECT_EQ(a.rotated, b.rotated);
  EXPECT_EQ(a.target, b.target);
  EXPECT_NE(a.target, c.target);
}

TEST(StartSystem, RootCounts) {
  EXPECT_EQ(make_start_system({2, 2, 2}, 1).root_count(), 8u);
  EXPECT_EQ(make_start_system({1}, 1).roots().size(), 1u);
  EXPECT_EQ(make_start_system({3, 2}, 1).roots().size(), 6u);
}

TEST(StartSystem, RootsAreDistinctSolutions) {
  const StartSystem s = make_start_system({2, 3, 2}, 99);
  const auto sys = s.equations();
  const auto roots = s.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<std::complex<double>> v(sys.size());
    sys.evaluate(roots[k].coords(), v);
    for (const auto& z : v) EXPECT_LT(std::abs(z), 1e-12);
    for (std::size_t m = 0; m < k; ++m) {
      double gap = 0;
      for (std::size_t i = 0; i < roots[k].size(); ++i) gap = std::max(gap, std::abs(roots[k][i] - roots[m][i]));
      EXPECT_GT(gap, 1e-3);
    }
  }
}

TEST(Tracker, FermatEndpointsSolveDiagonalSystem) {
  // For the Fermat cubic the fibre is x_i^2 proportional to b_i in the
  // rotated frame. Check that on the original coordinates: y = M x.
  const Polynomial f = cubic("x0^3+x1^3+x2^3+x3^3");
  TrackerConfig cfg;
  const TrialRun run = run_trial(f, cfg, 0, 1);
  const FiberSystem fs = build_fiber_system(f, derive_seed(run.seed, 0));
  EXPECT_EQ(run.count, 8);
  for (const auto& r : run.paths) {
    ASSERT_EQ(r.status, TrackStatus::regular);
    EXPECT_LT(r.residual, cfg.newton_tol);
    EXPECT_TRUE(std::isfinite(r.condition));
    // grad g(x) = M^T grad f(Mx) must be parallel to b.
    std::vector<std::complex<double>> y(4), gradf(4), gradg(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) y[i] += fs.rotation[i][j].get_d() * r.endpoint[j];
    }
    for (int i = 0; i < 4; ++i) gradf[i] = 3.0 * y[i] * y[i];
    for (int j = 0; j < 4; ++j) {
      for (int i = 0; i < 4; ++i) gradg[j] += fs.rotation[i][j].get_d() * gradf[i];
    }
    const std::complex<double> lambda = gradg[0] / fs.target[0];
    for (int j = 1; j < 4; ++j) EXPECT_LT(std::abs(gradg[j] - lambda * fs.target[j]), 1e-8 * std::abs(lambda));
  }
}

TEST(Tracker, ConeHasNoRegularEndpoints) {
  const TrialRun run = run_trial(cubic("x1^3+x2^3"), TrackerConfig{}, 0, 1);
  EXPECT_EQ(run.count, 0);
  for (const auto& r : run.paths) {
    EXPECT_NE(r.status, TrackStatus::regular);
  }
}

TEST(Tracker, GammaIndependence) {
  // Different seeds draw different gamma (and targets); the count is stable.
  const Polynomial f = cubic("x0^2*x2+x1^2*x3");
  TrackerConfig cfg;
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    cfg.seed = seed;
    EXPECT_EQ(run_trial(f, cfg, 0, 1).count, 2) << seed;
  }
}

TEST(Oracle, CubicFixtures) {
  EXPECT_EQ(count(cubic("x0^3+x1^3+x2^3+x3^3")), 8);
  EXPECT_EQ(count(cubic("x0^2*x2+x1^2*x3")), 2);
  EXPECT_EQ(count(cubic("x0^2*x2+x0*x1*x3+x1^3")), 1);
  EXPECT_EQ(count(cubic("x0^2+x1^2+x2^2+x3^2") * cubic("x0+2*x1+3*x2+5*x3")), 2);
  EXPECT_EQ(count(cubic("x3") * cubic("x0*x3-x1*x2")), 1);
  EXPECT_EQ(count(cubic("x0^2+x1^2+x2^2") * cubic("x0+x1+x2+x3")), 1);
  EXPECT_EQ(count(cubic("x2^2*x3-x1^3-x1^2*x3")), 0);
  EXPECT_EQ(count(cubic("x2^2*x3-x1^3")), 0);
}

TEST(Oracle, FourfoldExample) {
  EXPECT_EQ(count(parse("x0^2*x2+x1^2*x3+x4^3", 5)), 4);
}

TEST(Oracle, FermatQuarticCurve) {
  EXPECT_EQ(count(parse("x0^4+x1^4+x2^4", 3)), 9);
}

TEST(Oracle, BudgetAndDomain) {
  EXPECT_THROW(solve_count(parse("x0^6+x1^6+x2^6+x3^6+x4^6", 5)), BudgetExceeded);
  EXPECT_THROW(solve_count(parse("x0+x1", 2)), DomainError);
  EXPECT_THROW(solve_count(parse("x0^2+x1", 2)), DomainError);
  TrackerConfig even;
  even.trials = 4;
  EXPECT_THROW(solve_count(parse("x0^2+x1^2", 2), even), DomainError);
}

TEST(Oracle, DeterministicAcrossWorkerCounts) {
  const Polynomial f = cubic("x0^2*x2+x0*x1*x3+x1^3");
  TrackerConfig cfg;
  cfg.seed = 5;
  const TrialRun one = run_trial(f, cfg, 1, 1);
  for (unsigned workers : {2u, 3u, 8u}) {
    const TrialRun many = run_trial(f, cfg, 1, workers);
    ASSERT_EQ(one.paths.size(), many.paths.size());
    for (std::size_t i = 0; i < one.paths.size(); ++i) {
      EXPECT_EQ(one.paths[i].status, many.paths[i].status);
      EXPECT_EQ(one.paths[i].endpoint, many.paths[i].endpoint);
      EXPECT_EQ(one.paths[i].residual, many.paths[i].residual);
    }
    EXPECT_EQ(report_to_json(solve_count(f, cfg, 1)).dump(), report_to_json(solve_count(f, cfg, workers)).dump());
  }
}

TEST(Oracle, SmoothRandomSurfacesReachBezout) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> magnitude(1, 100);
  std::bernoulli_distribution negative(0.5);
  auto coeff = [&](std::mt19937_64& g) { return negative(g) ? -magnitude(g) : magnitude(g); };
  int hits = 0;
  const int runs = 100;
  for (int k = 0; k < runs; ++k) {
    const std::size_t n = 1 + k % 3;
    const unsigned d = 2 + (k / 3) % 2;
    // Dense: every monomial of degree d gets a random coefficient.
    Polynomial f(n + 1);
    std::vector<unsigned> exps(n + 1, 0);
    auto fill = [&](auto&& self, std::size_t var, unsigned left) -> void {
      if (var == n) {
        exps[n] = left;
        f.add_term(Monomial(exps), coeff(rng));
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        exps[var] = e;
        self(self, var + 1, left - e);
      }
    };
    fill(fill, 0, d);
    if (f.is_zero() || f.degree() != d) continue;
    TrackerConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(k);
    const OracleReport r = solve_count(f, cfg);
    if (r.pol_estimate == bezout_number(static_cast<Int>(n), d)) ++hits;
  }
  EXPECT_GE(hits, 99) << "of " << runs;
}

TEST(Oracle, UnionOfQuadricAndPlane) {
  // pol of a plane is 0; the intersections are a smooth conic (QP, CP) and
  // a pair of lines through the tangency point (QT). chi of the
  // intersection minus a generic line: 2 - 2 = 0 and 3 - 2 = 1.
  const Polynomial quadric = cubic("x0^2+x1^2+x2^2+x3^2");
  const Polynomial quadric_cone = cubic("x0^2+x1^2+x2^2");
  const Polynomial saddle = cubic("x0*x3-x1*x2");
  EXPECT_EQ(count(quadric), 1);
  EXPECT_EQ(count(quadric_cone), 0);
  EXPECT_EQ(count(saddle), 1);
  EXPECT_EQ(count(quadric * cubic("x0+2*x1+3*x2+5*x3")), union_pol(count(quadric), 0, 3, 0));
  EXPECT_EQ(count(saddle * cubic("x3")), union_pol(count(saddle), 0, 3, 1));
  EXPECT_EQ(count(quadric_cone * cubic("x0+x1+x2+x3")), union_pol(count(quadric_cone), 0, 3, 0));
}

TEST(Oracle, SemicontinuityUnderDeformation) {
  const std::vector<Polynomial> fixtures{
      cubic("x0^2*x2+x1^2*x3"),
      cubic("x0^2*x2+x0*x1*x3+x1^3"),
      cubic("x0^2+x1^2+x2^2+x3^2") * cubic("x0+2*x1+3*x2+5*x3"),
      cubic("x3") * cubic("x0*x3-x1*x2"),
      cubic("x0^2+x1^2+x2^2") * cubic("x0+x1+x2+x3"),
      cubic("x2^2*x3-x1^3-x1^2*x3"),
      cubic("x2^2*x3-x1^3"),
  };
  const Polynomial l = cubic("3*x0-2*x1+5*x2+7*x3");
  for (const auto& f : fixtures) {
    const Int base = count(f);
    for (const char* s : {"1/1000", "1/100", "1/10"}) {
      EXPECT_GE(count(deform(f, l, 3, Rational(s))), base) << to_string(f) << " s=" << s;
    }
  }
}

TEST(Oracle, YomdinOnE1) {
  const Polynomial f = cubic("x0^2*x2+x1^2*x3");
  const std::vector<Rational> h{Rational(2), Rational(-3), Rational(5)};
  const Polynomial slice = restrict_to_hyperplane(f, h);
  ASSERT_EQ(slice.nvars(), 3u);
  const Int pol_slice = count(slice);
  EXPECT_EQ(pol_slice, 3);
  const Polynomial l = cubic("2*x0-3*x1+5*x2-x3");
  EXPECT_EQ(count(deform(f, l, 3, Rational(1, 10))), 2 * pol_slice);
}

TEST(Oracle, ExtendedPrecisionAgrees) {
  TrackerConfig cfg;
  cfg.precision = Precision::extended;
  cfg.trials = 1;
  EXPECT_EQ(solve_count(cubic("x0^2*x2+x1^2*x3"), cfg).pol_estimate, 2);
  EXPECT_EQ(solve_count(cubic("x0^3+x1^3+x2^3+x3^3"), cfg).pol_estimate, 8);
}

TEST(Oracle, ReportFields) {
  const OracleReport r = solve_count(cubic("x0^2*x2+x1^2*x3"));
  EXPECT_EQ(r.per_trial_counts.size(), 5u);
  EXPECT_EQ(r.paths_total, 40);
  EXPECT_EQ(r.bezout, 8);
  Int discarded = 0;
  for (TrackStatus s : kAllStatuses) {
    if (s != TrackStatus::regular) discarded += r.discarded_count(s);
  }
  EXPECT_EQ(discarded + r.discarded_count(TrackStatus::regular), 40 - 5 * 2);
}

TEST(Oracle, ModalVoteAndConsensus) {
  // A single trial always agrees with itself.
  TrackerConfig cfg;
  cfg.trials = 1;
  EXPECT_TRUE(solve_count(cubic("x0^3+x1^3+x2^3+x3^3"), cfg).consensus);
  cfg.trials = 0;
  EXPECT_THROW(solve_count(cubic("x0^3+x1^3+x2^3+x3^3"), cfg), DomainError);
}

TEST(ReportJson, RoundTrip) {
  const OracleReport r = solve_count(cubic("x0^2*x2+x0*x1*x3+x1^3"));
  const auto j = report_to_json(r);
  const OracleReport back = report_from_json(j);
  EXPECT_EQ(report_to_json(back), j);
  EXPECT_EQ(back.pol_estimate, 1);
  auto bad = j;
  bad["extra"] = 1;
  EXPECT_THROW(report_from_json(bad), SchemaError);
  bad = j;
  bad.erase("consensus");
  EXPECT_THROW(report_from_json(bad), SchemaError);
  bad = j;
  bad["discarded"]["lost"] = 2;
  EXPECT_THROW(report_from_json(bad), SchemaError);
}

TEST(Verify, Examples) {
  const VerifyReport e1 = verify(cubic("x0^2*x2+x1^2*x3"), e1_profile());
  EXPECT_TRUE(e1.match);
  EXPECT_EQ(e1.formula->pol, 2);
  const VerifyReport smooth = verify(cubic("x0^3+x1^3+x2^3+x3^3"), smooth_profile(3, 3));
  EXPECT_TRUE(smooth.match);
  EXPECT_EQ(smooth.oracle.pol_estimate, 8);
  const VerifyReport b = verify(parse("x0^2*x2+x1^2*x3+x4^3", 5), e1b_profile());
  EXPECT_TRUE(b.match);
  EXPECT_EQ(b.formula->pol, 4);
  EXPECT_TRUE(verify(cubic("x0^2*x2+x0*x1*x3+x1^3"), e2_profile()).match);
  EXPECT_TRUE(verify(cubic("x3") * cubic("x0*x3-x1*x2"), qt_profile()).match);
  EXPECT_TRUE(verify(cubic("x0^2+x1^2+x2^2+x3^2") * cubic("x0+2*x1+3*x2+5*x3"), qp_profile()).match);
  EXPECT_TRUE(verify(cubic("x0^2+x1^2+x2^2") * cubic("x0+x1+x2+x3"), cp_profile()).match);
}

TEST(Verify, MismatchIsReported) {
  const VerifyReport r = verify(cubic("x0^3+x1^3+x2^3+x3^3"), e1_profile());
  EXPECT_FALSE(r.match);
  EXPECT_EQ(r.oracle.pol_estimate, 8);
  SingularityProfile impossible = smooth_profile(3, 3);
  impossible.isolated.push_back({9, std::nullopt});
  const VerifyReport bad = verify(cubic("x0^3+x1^3+x2^3+x3^3"), impossible);
  EXPECT_FALSE(bad.match);
  EXPECT_TRUE(bad.formula_error.has_value());
  EXPECT_THROW(verify(cubic("x0^3+x1^3+x2^3+x3^3"), smooth_profile(2, 3)), DomainError);
}
