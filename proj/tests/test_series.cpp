// Copyright 2026 The erdos-stieltjes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "erdos/series.hpp"

namespace {

using erdos::AccelerationMethod;

const erdos::PrimeTable& table() {
  static const auto t = erdos::sieve(erdos::limit_for_prime_count(1'000'001));
  return t;
}

TEST(ErdosSeries, FirstPartialSums) {
  EXPECT_DOUBLE_EQ(erdos::erdos_partial_sum(table(), 1), -0.5);
  EXPECT_NEAR(erdos::erdos_partial_sum(table(), 2), 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(erdos::erdos_partial_sum(table(), 3), 1.0 / 6.0 - 3.0 / 5.0, 1e-16);
}

TEST(ErdosSeries, CapacityAndDomainErrors) {
  const auto small = erdos::sieve(30);
  EXPECT_THROW(erdos::erdos_partial_sum(small, 11), erdos::capacity_error);
  EXPECT_NO_THROW(erdos::erdos_partial_sum(small, 10));
  EXPECT_THROW(erdos::erdos_partial_sum(small, 0), std::domain_error);
}

TEST(ErdosSeries, TermMagnitudeBelowOne) {
  for (std::size_t n = 1; n <= 1'000'000; n += 997)
    ASSERT_LT(std::abs(erdos::erdos_term(table(), n)), 1.0);
  for (std::size_t n = 1; n <= 1000; ++n) {
    const double t = std::abs(erdos::erdos_term(table(), n));
    ASSERT_GT(t, 0.0);
    ASSERT_LT(t, 1.0);
  }
}

TEST(ErdosSeries, ExtendingNLeavesEarlierSumsUnchanged) {
  const std::size_t m = 300'001;
  const double before = erdos::erdos_partial_sum(table(), m);
  (void)erdos::erdos_partial_sum(table(), 1'000'000);
  EXPECT_EQ(erdos::erdos_partial_sum(table(), m), before);
}

TEST(ErdosSeries, IndependentOfThreadCount) {
  const double one = erdos::erdos_partial_sum(table(), 1'000'000, 1);
  for (unsigned threads : {2u, 3u, 7u}) {
    EXPECT_EQ(erdos::erdos_partial_sum(table(), 1'000'000, threads), one) << threads;
  }
  const auto a = erdos::estimate_erdos_series(table(), 500'000,
                                              AccelerationMethod::iterated_average, 10, 1);
  const auto b = erdos::estimate_erdos_series(table(), 500'000,
                                              AccelerationMethod::iterated_average, 10, 5);
  EXPECT_EQ(a.result.accelerated_value, b.result.accelerated_value);
  EXPECT_EQ(a.result.estimated_uncertainty, b.result.estimated_uncertainty);
}

TEST(Accelerate, MidpointOfTwo) {
  const std::vector<double> s{-0.5, 1.0 / 6.0};
  const auto r = erdos::accelerate(s, AccelerationMethod::pair_average, 1);
  EXPECT_NEAR(r.accelerated_value, -1.0 / 6.0, 1e-16);
  EXPECT_EQ(r.raw_partial_sum, 1.0 / 6.0);
  EXPECT_EQ(r.rounds, 1);
}

TEST(Accelerate, ConstantIsFixedPoint) {
  const std::vector<double> s{0.25, 0.25, 0.25};
  const auto r = erdos::accelerate(s, AccelerationMethod::iterated_average, 2);
  EXPECT_EQ(r.accelerated_value, 0.25);
  EXPECT_EQ(r.estimated_uncertainty, 0.0);
}

TEST(Accelerate, NoneReturnsRawSum) {
  const std::vector<double> s{1.0, 0.5, 0.75};
  const auto r = erdos::accelerate(s, AccelerationMethod::none, 1);
  EXPECT_EQ(r.accelerated_value, r.raw_partial_sum);
  EXPECT_EQ(r.estimated_uncertainty, 0.25);
}

TEST(Accelerate, DomainErrors) {
  const std::vector<double> one{1.0};
  const std::vector<double> three{1.0, 2.0, 3.0};
  EXPECT_THROW(erdos::accelerate(one, AccelerationMethod::pair_average, 1), std::domain_error);
  EXPECT_THROW(erdos::accelerate(three, AccelerationMethod::iterated_average, 3),
               std::domain_error);
  EXPECT_THROW(erdos::accelerate(three, AccelerationMethod::iterated_average, 0),
               std::domain_error);
}

TEST(Accelerate, AlternatingHarmonicToMinusLogTwo) {
  // Oracle: -log 2 is the known sum of (-1)^n / n.
  std::vector<double> sums;
  double s = 0.0;
  for (int n = 1; n <= 10'000; ++n) {
    s += (n % 2 ? -1.0 : 1.0) / n;
    sums.push_back(s);
  }
  const std::span<const double> tail(sums.data() + sums.size() - 9, 9);
  const auto r = erdos::accelerate(tail, AccelerationMethod::iterated_average, 8);
  EXPECT_NEAR(r.accelerated_value, -std::numbers::ln2, 1e-8);
  EXPECT_GT(std::abs(sums.back() + std::numbers::ln2), 1e-5);
}

TEST(Accelerate, ExactOnGeometricAlternating) {
  const double ratio = 0.5;
  std::vector<double> sums;
  double s = 0.0, term = 1.0;
  for (int n = 1; n <= 100; ++n) {
    term *= -ratio;
    s += term;
    sums.push_back(s);
  }
  const auto r = erdos::accelerate(sums, AccelerationMethod::iterated_average, 10);
  EXPECT_NEAR(r.accelerated_value, -ratio / (1.0 + ratio), 1e-10);
}

TEST(ErdosEstimate, ParityEstimatesWithinOscillation) {
  const auto est = erdos::estimate_erdos_series(table(), 1'000'000,
                                                AccelerationMethod::iterated_average, 10);
  const double parity_gap = std::abs(est.result.accelerated_value - est.opposite_parity_value);
  const double oscillation = std::abs(erdos::erdos_term(table(), 1'000'000));
  EXPECT_LT(parity_gap, oscillation);
  EXPECT_GE(est.result.estimated_uncertainty, est.checkpoints.back().step_uncertainty);
  EXPECT_EQ(est.result.terms_used, 1'000'000u);
  EXPECT_NEAR(est.result.accelerated_value, -0.052161, 5e-3);
  ASSERT_GE(est.checkpoints.size(), 2u);
  for (std::size_t i = 1; i < est.checkpoints.size(); ++i)
    EXPECT_EQ(est.checkpoints[i].terms, est.checkpoints[i - 1].terms * 2 +
                                            (est.checkpoints[i].terms % 2));
}

TEST(ErdosEstimate, CheckpointRowsMatchDirectSums) {
  const auto est = erdos::estimate_erdos_series(table(), 4096,
                                                AccelerationMethod::iterated_average, 4);
  for (const auto& c : est.checkpoints)
    EXPECT_NEAR(c.raw_partial_sum, erdos::erdos_partial_sum(table(), c.terms), 1e-15);
}

TEST(GapSeries, FirstTerms) {
  EXPECT_DOUBLE_EQ(erdos::gap_series_partial(table(), 1.0, 1), -1.0);
  EXPECT_DOUBLE_EQ(erdos::gap_series_partial(table(), 1.0, 2), -0.75);
}

TEST(GapSeries, Errors) {
  const auto small = erdos::sieve(30);  // 10 primes
  EXPECT_THROW(erdos::gap_series_partial(small, 1.0, 10), erdos::capacity_error);
  EXPECT_NO_THROW(erdos::gap_series_partial(small, 1.0, 9));
  EXPECT_THROW(erdos::gap_series_partial(small, 0.0, 3), std::domain_error);
}

TEST(GapSeries, ExploratoryRunReportsDiagnostics) {
  const auto est = erdos::estimate_gap_series(table(), 0.6, 1'000'000,
                                              AccelerationMethod::iterated_average, 10);
  EXPECT_TRUE(std::isfinite(est.result.accelerated_value));
  EXPECT_TRUE(std::isfinite(est.result.estimated_uncertainty));
  EXPECT_GE(est.result.estimated_uncertainty, 0.0);
  EXPECT_GE(est.checkpoints.size(), 5u);
}

}  // namespace
