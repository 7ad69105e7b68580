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
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "erdos/asymptotics.hpp"
#include "erdos/special.hpp"
#include "oracles.hpp"

namespace {

using cd = std::complex<double>;
using erdos::TestFunction;

// int_1^inf of h over [1, 1 + 60/lambda], beyond which e^{-lambda x} < e^{-60}.
cd damped_oracle(const std::function<cd(double)>& h, double lambda) {
  const double end = 1.0 + 60.0 / lambda;
  return oracle::composite_gauss<cd>(h, 1.0, end, static_cast<int>(2 * end) + 8);
}

TEST(MainTerm, I1MatchesQuadrature) {
  for (double lambda : {0.05, 0.5, 1.0, 2.5}) {
    const cd ref = damped_oracle(
        [&](double x) { return erdos::cis_pi(x) * std::exp(-lambda * x); }, lambda);
    EXPECT_LE(std::abs(erdos::main_term_I1(lambda) - ref), 1e-12) << lambda;
  }
  const cd at_one = erdos::main_term_I1(1.0);
  EXPECT_NEAR(at_one.real(), -0.0338447865807, 1e-12);
  EXPECT_NEAR(at_one.imag(), -0.1063265328842, 1e-12);
}

TEST(MainTerm, SmallLambdaLimit) {
  const cd limit = erdos::main_term_I1_small_lambda(1e-9);
  EXPECT_NEAR(limit.real(), 0.0, 1e-9);
  EXPECT_NEAR(limit.imag(), -1.0 / std::numbers::pi, 1e-12);
  EXPECT_LE(std::abs(erdos::main_term_I1(1e-6) - erdos::main_term_I1_small_lambda(1e-6)),
            1e-6);
}

TEST(MainTerm, AfterPartsExactMatchesQuadrature) {
  for (double lambda : {0.1, 1.0, 2.0}) {
    const cd c(-lambda, std::numbers::pi);
    const cd ref =
        c * damped_oracle([&](double x) { return x * std::exp(c * x); }, lambda);
    EXPECT_LE(std::abs(erdos::main_term_after_parts_exact(lambda) - ref), 1e-11) << lambda;
  }
  const cd at_one = erdos::main_term_after_parts_exact(1.0);
  EXPECT_NEAR(at_one.real(), 0.401724227752136391, 1e-14);
  EXPECT_NEAR(at_one.imag(), 0.106326532884222906, 1e-14);
}

TEST(MainTerm, AfterPartsCandidateFormDiffersFromIntegral) {
  const cd d(1.0, -std::numbers::pi);
  EXPECT_EQ(erdos::main_term_after_parts(1.0), -std::exp(-1.0) / (d * d));
  EXPECT_GT(std::abs(erdos::main_term_after_parts(1.0) - erdos::main_term_after_parts_exact(1.0)),
            0.1);
}

TEST(MainTerm, RejectsNonPositiveLambda) {
  EXPECT_THROW(erdos::main_term_I1(0.0), std::domain_error);
  EXPECT_THROW(erdos::main_term_after_parts(-1.0), std::domain_error);
  EXPECT_THROW(erdos::laplace_tail(0.5, 0.0), std::domain_error);
  EXPECT_THROW(erdos::laplace_tail(-0.5, 1.0), std::domain_error);
}

TEST(LambdaMinusIPi, SquaredModulus) {
  for (double lambda : {0.1, 1.0, 3.0}) {
    const double m = std::norm(cd(lambda, -std::numbers::pi));
    EXPECT_NEAR(m, lambda * lambda + std::numbers::pi * std::numbers::pi, 1e-13);
    EXPECT_GE(m, std::numbers::pi * std::numbers::pi);
  }
}

TEST(IncompleteGamma, MatchesBoost) {
  for (double a : {0.5, 1.0, 1.5, 2.0, 3.7, 10.0}) {
    for (double x : {1e-4, 0.01, 0.5, 1.0, 2.0, 5.0, 20.0, 60.0}) {
      const double ref = boost::math::tgamma(a, x);
      EXPECT_NEAR(erdos::upper_incomplete_gamma(a, x), ref, 1e-13 * ref) << a << " " << x;
      EXPECT_NEAR(erdos::regularized_upper_gamma(a, x), boost::math::gamma_q(a, x), 1e-13)
          << a << " " << x;
    }
  }
}

TEST(LaplaceTail, ClosedForms) {
  EXPECT_NEAR(erdos::laplace_tail(0.0, 1.0).exact, std::exp(-1.0), 1e-15);
  EXPECT_NEAR(erdos::laplace_tail(1.0, 1.0).exact, 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(erdos::laplace_tail(0.5, 0.01).ratio(), 0.99925224466, 1e-10);
}

TEST(LaplaceTail, MatchesQuadrature) {
  for (double theta : {0.0, 0.3, 0.5, 1.0, 2.0}) {
    for (double lambda : {0.05, 0.5, 2.0}) {
      const double end = 1.0 + 80.0 / lambda;
      const std::function<double(double)> h = [&](double x) {
        return std::pow(x, theta) * std::exp(-lambda * x);
      };
      const double ref = oracle::composite_gauss<double>(h, 1.0, end, 4000);
      EXPECT_NEAR(erdos::laplace_tail(theta, lambda).exact, ref, 1e-11 * ref)
          << theta << " " << lambda;
    }
  }
}

TEST(LaplaceTail, RatioRisesToOneAsLambdaFalls) {
  for (double theta : {0.0, 0.5, 1.0}) {
    double previous = 0.0;
    for (double lambda : {1.0, 0.3, 0.1, 0.03, 0.01, 0.001}) {
      const double r = erdos::laplace_tail(theta, lambda).ratio();
      EXPECT_GT(r, previous);
      EXPECT_LE(r, 1.0);
      previous = r;
    }
    EXPECT_NEAR(previous, 1.0, 1e-2);
  }
}

TEST(LeastSquares, ExactLine) {
  const std::vector<double> xs{0, 1, 2, 3}, ys{1, 3, 5, 7};
  const auto fit = erdos::least_squares(xs, ys);
  EXPECT_NEAR(fit.slope, 2.0, 1e-15);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-15);
  EXPECT_NEAR(fit.residual, 0.0, 1e-15);
}

TEST(GeometricGrid, EndsAndRatio) {
  const auto g = erdos::geometric_grid(1.0, 1e-3, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.front(), 1.0);
  EXPECT_EQ(g.back(), 1e-3);
  EXPECT_NEAR(g[1], 0.1, 1e-15);
}

TEST(ExponentFit, RecoversPlantedExponent) {
  const auto grid = erdos::geometric_grid(1e-2, 1e-4, 8);
  for (double s : {0.5, 1.0, 1.5}) {
    const auto measure = erdos::planted_remainder_measure(s, 400'000);
    const auto fit = erdos::fit_error_exponent(measure, grid, 400'000.0);
    EXPECT_NEAR(fit.fitted_slope, s, 0.05) << s;
    EXPECT_EQ(fit.magnitudes.size(), grid.size());
    for (std::size_t i = 1; i < fit.magnitudes.size(); ++i)
      EXPECT_GT(fit.magnitudes[i], fit.magnitudes[i - 1]);
  }
}

TEST(ExponentFit, PlantedMagnitudeMatchesGammaAsymptotic) {
  const double s = 1.5, lambda = 1e-4;
  const auto measure = erdos::planted_remainder_measure(s, 400'000);
  const auto r = erdos::split_main_error(measure, TestFunction(lambda), 400'000.0);
  const double expected = std::tgamma(s + 1.0) * std::pow(lambda, -s);
  EXPECT_NEAR(std::abs(r.error_term) / expected, 1.0, 1e-3);
}

TEST(ExponentFit, ThreadInvariant) {
  const auto grid = erdos::geometric_grid(1e-1, 1e-3, 6);
  const auto measure = erdos::planted_remainder_measure(0.8, 50'000);
  const auto a = erdos::fit_error_exponent(measure, grid, 50'000.0, 1);
  const auto b = erdos::fit_error_exponent(measure, grid, 50'000.0, 4);
  EXPECT_EQ(a.fitted_slope, b.fitted_slope);
  EXPECT_EQ(a.magnitudes, b.magnitudes);
}

TEST(ExponentFit, Validation) {
  const auto measure = erdos::planted_remainder_measure(1.0, 10'000);
  const auto five = erdos::geometric_grid(1.0, 0.1, 5);
  EXPECT_THROW(erdos::fit_error_exponent(measure, five, 10'000.0), std::domain_error);
  const std::vector<double> increasing{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  EXPECT_THROW(erdos::fit_error_exponent(measure, increasing, 10'000.0), std::domain_error);
  const std::vector<double> too_big{5.0, 2.0, 1.0, 0.5, 0.2, 0.1};
  EXPECT_THROW(erdos::fit_error_exponent(measure, too_big, 10'000.0), std::domain_error);
  // X too small for the smallest lambda.
  const auto deep = erdos::geometric_grid(1e-1, 1e-4, 6);
  EXPECT_THROW(erdos::fit_error_exponent(measure, deep, 10'000.0), erdos::precision_error);
  EXPECT_THROW(erdos::fit_error_exponent(measure, erdos::geometric_grid(1.0, 0.1, 6), 20'000.0),
               std::out_of_range);
}

TEST(ThresholdProbe, ConvergenceSwitchesNearOneHalf) {
  const std::vector<double> grid{0.2, 0.4, 0.6, 1.0, 2.0};
  const auto probe = erdos::power_law_threshold_probe(0.5, grid);
  ASSERT_EQ(probe.rows.size(), grid.size());
  EXPECT_FALSE(probe.rows[0].convergent);
  EXPECT_FALSE(probe.rows[1].convergent);
  EXPECT_TRUE(probe.rows[2].convergent);
  EXPECT_TRUE(probe.rows[3].convergent);
  EXPECT_NEAR(probe.rows[4].value, 4.0 / 3.0, 1e-6);
  EXPECT_NEAR(probe.rows[3].value, 2.0, 1e-6);
  ASSERT_TRUE(probe.empirical_threshold.has_value());
  EXPECT_NEAR(*probe.empirical_threshold, 0.5, 0.1);
}

}  // namespace
