// Copyright 2026 The Poisson Prophet Authors.
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

#include "pprophet/distributions.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pprophet/poisson_stopping.hpp"
#include "pprophet/rng.hpp"

namespace pprophet {
namespace {

using V = std::vector<double>;

TEST(FiniteDistTest, PointMass) {
  const FiniteDist d = make_finite_dist(V{1.0}, V{1.0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.atom(0), 1.0);
  EXPECT_EQ(d.prob(0), 1.0);
}

TEST(FiniteDistTest, MergesAndRenormalizes) {
  const FiniteDist d = make_finite_dist(V{1, 1, 2}, V{1, 1, 2});
  EXPECT_EQ(d.atoms(), (V{1.0, 2.0}));
  EXPECT_EQ(d.probs(), (V{0.5, 0.5}));
}

TEST(FiniteDistTest, SortsAndDropsZeroWeights) {
  const FiniteDist d = make_finite_dist(V{3, 0.5, 2}, V{1, 2, 0});
  EXPECT_EQ(d.atoms(), (V{0.5, 3.0}));
  EXPECT_NEAR(d.prob(0), 2.0 / 3.0, 1e-15);
}

TEST(FiniteDistTest, MergesWithinTolerance) {
  const FiniteDist d = make_finite_dist(V{1.0, 1.0 + 1e-13, 2.0}, V{1, 1, 1});
  EXPECT_EQ(d.size(), 2u);
}

TEST(FiniteDistTest, ExtremalShapedTwoPointLaw) {
  const FiniteDist d = make_finite_dist(V{0.2, 1.0}, V{0.9, 0.1});
  EXPECT_EQ(d.atoms(), (V{0.2, 1.0}));
  EXPECT_DOUBLE_EQ(d.prob(1), 0.1);
}

TEST(FiniteDistTest, RejectsBadInput) {
  EXPECT_THROW(make_finite_dist(V{}, V{}), DomainError);
  EXPECT_THROW(make_finite_dist(V{-1.0}, V{1.0}), DomainError);
  EXPECT_THROW(make_finite_dist(V{1.0}, V{-1.0}), DomainError);
  EXPECT_THROW(make_finite_dist(V{1.0, 2.0}, V{0.0, 0.0}), DomainError);
  EXPECT_THROW(make_finite_dist(V{1.0, 2.0}, V{1.0}), DomainError);
  EXPECT_THROW(make_finite_dist(V{0.0}, V{1.0}), DomainError);
  EXPECT_NO_THROW(make_finite_dist(V{0.0}, V{1.0}, Law::kGeneral));
  EXPECT_NO_THROW(make_finite_dist(V{0.0, 1.0}, V{1.0, 1.0}));
}

TEST(FiniteDistTest, FromProbsChecksSum) {
  EXPECT_THROW(FiniteDist::from_probs(V{1, 2}, V{0.5, 0.6}), DomainError);
  EXPECT_NO_THROW(FiniteDist::from_probs(V{1, 2}, V{0.5, 0.5 + 1e-10}));
}

TEST(FiniteDistTest, NormalizationIsExactAndIdempotent) {
  UniformSource u(Xoshiro256(7));
  for (int i = 0; i < 200; ++i) {
    const FiniteDist d = testing::random_law(u, 1, 8);
    double s = 0.0;
    for (double p : d.probs()) s += p;
    EXPECT_EQ(s, 1.0);
    const FiniteDist again = make_finite_dist(d.atoms(), d.probs());
    EXPECT_EQ(again, d);
  }
}

TEST(TailStatsTest, PointMass) {
  const TailStats s = tail_stats(FiniteDist::point_mass(1.0));
  EXPECT_EQ(s.r, (V{1.0}));
  EXPECT_EQ(s.mu, (V{1.0, 0.0}));
  EXPECT_EQ(s.etail, (V{1.0}));
}

TEST(TailStatsTest, TwoPointFamily) {
  const double t = 2.0, a = 1.0, k = 50.0;
  const double r2 = a / (t * k);
  const TailStats s = tail_stats(make_finite_dist(V{1.0, k}, V{1 - r2, r2}));
  EXPECT_NEAR(s.mu[1], (a / (t * k)) * (k - 1), 1e-13);
  EXPECT_NEAR(s.mu[0], s.mu[1] + 1.0, 1e-13);
}

TEST(TailStatsTest, ThreePointFamily) {
  const double t = 3.0, a = 2.0, b = 1.0, k = 40.0;
  const double r2 = a / t, r3 = b / (t * k);
  const TailStats s =
      tail_stats(make_finite_dist(V{1, k, k * k}, V{1 - r2, r2 - r3, r3}));
  EXPECT_NEAR(s.mu[2], b * (k - 1) / t, 1e-11);
  EXPECT_NEAR(s.mu[1], (a + b) * (k - 1) / t, 1e-11);
}

TEST(TailStatsTest, InvariantsOnRandomLaws) {
  UniformSource u(Xoshiro256(11));
  for (int i = 0; i < 1000; ++i) {
    const FiniteDist d = testing::random_law(u, 1, 8);
    const TailStats s = tail_stats(d);
    const std::size_t n = s.size();
    EXPECT_EQ(s.r[0], 1.0);
    EXPECT_EQ(s.mu[n], 0.0);
    EXPECT_NEAR(s.r[n - 1], d.prob(n - 1), 1e-15);
    for (std::size_t k = 1; k <= n; ++k) {
      const double resid = s.mu[k - 1] - s.mu[k] - s.r[k - 1] * (s.a(k) - s.a(k - 1));
      EXPECT_LT(std::abs(resid), 1e-12 * (1.0 + s.mu[0]));
      if (k < n) {
        EXPECT_GT(s.r[k - 1], s.r[k]);
      }
      EXPECT_GT(s.mu[k - 1], s.mu[k]);
      EXPECT_NEAR(s.etail[k - 1], s.a(k) + s.mu[k] / s.r[k - 1],
                  1e-12 * s.etail[k - 1]);
      EXPECT_NEAR(s.mu[k], testing::direct_mean_excess(d, s.a(k)),
                  1e-12 * (1.0 + s.mu[0]));
    }
  }
}

TEST(MeanExcessTest, Examples) {
  const FiniteDist one = FiniteDist::point_mass(1.0);
  EXPECT_EQ(mean_excess(one, 0.0), 1.0);
  EXPECT_EQ(mean_excess(one, 2.0), 0.0);
  const FiniteDist d = make_finite_dist(V{0.2, 1.0}, V{0.9, 0.1});
  EXPECT_NEAR(mean_excess(d, 0.5), 0.05, 1e-16);
  EXPECT_THROW(mean_excess(d, -0.1), DomainError);
}

TEST(MeanExcessTest, NonincreasingConvexAndEqualsMean) {
  UniformSource u(Xoshiro256(3));
  for (int i = 0; i < 100; ++i) {
    const FiniteDist d = testing::random_law(u, 1, 8, 0.0 + 1e-3, 10.0);
    EXPECT_NEAR(mean_excess(d, 0.0), d.mean(), 1e-12 * d.mean());
    const double h = d.max_atom() / 200.0;
    for (int j = 1; j < 220; ++j) {
      const double lo = mean_excess(d, (j - 1) * h);
      const double mid = mean_excess(d, j * h);
      const double hi = mean_excess(d, (j + 1) * h);
      EXPECT_LE(mid, lo + 1e-14);
      EXPECT_LE(2.0 * mid, lo + hi + 1e-12);
    }
  }
}

TEST(SolveCAlphaTest, PointMass) {
  const FiniteDist one = FiniteDist::point_mass(1.0);
  EXPECT_DOUBLE_EQ(solve_c_alpha(one, 1.0), 0.5);
  for (double alpha : {0.01, 0.3, 2.0, 50.0}) {
    EXPECT_NEAR(solve_c_alpha(one, alpha), 1.0 / (1.0 + alpha), 1e-15);
  }
}

TEST(SolveCAlphaTest, TwoPointLaw) {
  // On [0.2, 1], 0.1 (1 - c) = 0.05 c gives c = 2/3.
  const FiniteDist d = make_finite_dist(V{0.2, 1.0}, V{0.9, 0.1});
  const double c = solve_c_alpha(d, 0.05);
  EXPECT_NEAR(c, 2.0 / 3.0, 1e-14);
  EXPECT_LT(std::abs(mean_excess(d, c) - 0.05 * c), 1e-12);
  EXPECT_THROW(solve_c_alpha(d, 0.0), DomainError);
  EXPECT_THROW(solve_c_alpha(d, -1.0), DomainError);
}

TEST(SolveCAlphaTest, MatchesBisectionOracle) {
  UniformSource u(Xoshiro256(5));
  for (int i = 0; i < 500; ++i) {
    const FiniteDist d = testing::random_law(u, 1, 8, 1e-2, 1e2);
    const double alpha = std::pow(10.0, -3.0 + 5.0 * u());
    const double c = solve_c_alpha(d, alpha);
    const double oracle = testing::bisect_decreasing(
        [&](double x) { return testing::direct_mean_excess(d, x) - alpha * x; },
        0.0, d.max_atom());
    EXPECT_LT(std::abs(mean_excess(d, c) - c * alpha), 1e-10 * (1 + d.mean()));
    EXPECT_NEAR(c, oracle, 1e-10 * (1 + d.max_atom()));
  }
}

TEST(SolveCAlphaTest, ZeroAtomAllowed) {
  const FiniteDist d = make_finite_dist(V{0.0, 1.0}, V{0.5, 0.5});
  const double c = solve_c_alpha(d, 1.0);
  EXPECT_NEAR(c, 1.0 / 3.0, 1e-15);  // 0.5 (1 - c) = c
}

TEST(BalayageTest, EndpointsOnly) {
  const FiniteDist d = make_finite_dist(V{0.0, 1.0}, V{0.5, 0.5}, Law::kGeneral);
  const FiniteDist b = balayage(d, 0.0, 1.0);
  EXPECT_EQ(b.atoms(), d.atoms());
  EXPECT_NEAR(b.prob(0), 0.5, 1e-16);
}

TEST(BalayageTest, MidpointSplitsEvenly) {
  const FiniteDist b = balayage(FiniteDist::point_mass(0.5), 0.0, 1.0);
  EXPECT_EQ(b.atoms(), (V{0.0, 1.0}));
  EXPECT_NEAR(b.prob(0), 0.5, 1e-16);
  EXPECT_NEAR(b.prob(1), 0.5, 1e-16);
}

TEST(BalayageTest, SweepsInteriorAtom) {
  // 0.4 at 0.5 splits as 0.4 * 0.5/0.8 = 0.25 to 0.2, 0.15 to 1.
  const FiniteDist d = make_finite_dist(V{0.2, 0.5, 1.0}, V{0.3, 0.4, 0.3});
  const FiniteDist b = balayage(d, 0.2, 1.0);
  EXPECT_EQ(b.atoms(), (V{0.2, 1.0}));
  EXPECT_NEAR(b.prob(0), 0.55, 1e-15);
  EXPECT_NEAR(b.prob(1), 0.45, 1e-15);
  EXPECT_NEAR(b.mean(), d.mean(), 1e-15);
}

TEST(BalayageTest, RejectsBadEndpoints) {
  const FiniteDist d = FiniteDist::point_mass(1.0);
  EXPECT_THROW(balayage(d, 1.0, 1.0), DomainError);
  EXPECT_THROW(balayage(d, 2.0, 1.0), DomainError);
  EXPECT_THROW(balayage(d, -1.0, 1.0), DomainError);
}

TEST(BalayageTest, PreservesFunctionalsAndRaisesExpectedMax) {
  UniformSource u(Xoshiro256(13));
  for (int i = 0; i < 500; ++i) {
    const FiniteDist d = testing::random_law(u, 2, 8, 1e-2, 10.0);
    const double x = d.max_atom() * u();
    const double y = d.max_atom() * u();
    const double c = std::min(x, y);
    const double dd = std::max(x, y);
    if (dd - c < 1e-6) continue;
    const FiniteDist b = balayage(d, c, dd);
    EXPECT_NEAR(b.mean(), d.mean(), 1e-12);
    EXPECT_NEAR(b.tail_prob(c), d.tail_prob(c), 1e-12);
    const double cond_d = (mean_excess(d, c) + c * d.tail_prob(c)) / d.tail_prob(c);
    const double cond_b = (mean_excess(b, c) + c * b.tail_prob(c)) / b.tail_prob(c);
    EXPECT_NEAR(cond_b, cond_d, 1e-12 * (1 + cond_d));
    for (double t : {0.3, 1.0, 4.0}) {
      EXPECT_GE(expected_max(b, t), expected_max(d, t) - 1e-12);
    }
  }
}

}  // namespace
}  // namespace pprophet
