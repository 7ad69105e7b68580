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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/parallel.hpp"
#include "erdos/quadrature.hpp"
#include "erdos/special.hpp"
#include "erdos/stieltjes.hpp"

namespace erdos {

namespace detail {

inline void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("lambda must be positive");
}

inline complex lambda_minus_i_pi(double lambda) { return {lambda, -std::numbers::pi}; }

}  // namespace detail

/// int_1^inf e^{(i pi - lambda) x} dx = -e^{-lambda} / (lambda - i pi).
inline complex main_term_I1(double lambda) {
  detail::require_positive_lambda(lambda);
  return -std::exp(-lambda) / detail::lambda_minus_i_pi(lambda);
}

/// The lambda -> 0+ form -1 / (lambda - i pi), which drops the e^{-lambda}.
inline complex main_term_I1_small_lambda(double lambda) {
  detail::require_positive_lambda(lambda);
  return -1.0 / detail::lambda_minus_i_pi(lambda);
}

/**
 * The candidate closed form e^{i pi - lambda} / (lambda - i pi)^2 for the main
 * term after integration by parts.
 *
 * Note: it is not the value of (i pi - lambda) int_1^inf x e^{(i pi - lambda) x} dx,
 * which is main_term_after_parts_exact(). Both are kept so reports can show
 * the gap.
 */
inline complex main_term_after_parts(double lambda) {
  detail::require_positive_lambda(lambda);
  const complex d = detail::lambda_minus_i_pi(lambda);
  return -std::exp(-lambda) / (d * d);
}

/// (i pi - lambda) int_1^inf x e^{(i pi - lambda) x} dx
///   = e^{-lambda} (1 + lambda - i pi) / (lambda - i pi).
inline complex main_term_after_parts_exact(double lambda) {
  detail::require_positive_lambda(lambda);
  return std::exp(-lambda) * complex(1.0 + lambda, -std::numbers::pi) /
         detail::lambda_minus_i_pi(lambda);
}

struct LaplaceTail {
  double theta = 0.0;
  double lambda = 0.0;
  double exact = 0.0;       // int_1^inf x^theta e^{-lambda x} dx
  double asymptotic = 0.0;  // Gamma(theta + 1) / lambda^{theta + 1}

  double ratio() const { return exact / asymptotic; }
};

/// exact = Gamma(theta + 1, lambda) / lambda^{theta + 1} via the incomplete
/// gamma function (series below lambda = theta + 1, continued fraction above).
inline LaplaceTail laplace_tail(double theta, double lambda) {
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw std::domain_error("theta must be >= 0");
  detail::require_positive_lambda(lambda);
  const double a = theta + 1.0;
  const double scale = std::pow(lambda, -a);
  return {theta, lambda, upper_incomplete_gamma(a, lambda) * scale,
          std::tgamma(a) * scale};
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of the fit residuals
};

/// Ordinary least squares y = slope * x + intercept, equal weights.
inline LineFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::domain_error("least squares needs >= 2 paired points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::domain_error("least squares needs distinct abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

/// `points` values from `first` to `last`, equally spaced in log.
inline std::vector<double> geometric_grid(double first, double last, std::size_t points) {
  if (points < 2 || !(first > 0.0) || !(last > 0.0))
    throw std::domain_error("geometric grid needs >= 2 points and positive ends");
  std::vector<double> grid(points);
  const double step = std::log(last / first) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = first * std::exp(step * static_cast<double>(i));
  grid.back() = last;
  return grid;
}

struct FitRow {
  double lambda = 0.0;
  complex total;
  complex main_term;
  complex error_term;
  double truncation_bound = 0.0;
};

/// Log-log fit of |I_2(lambda)| against 1/lambda.
struct ExponentFit {
  std::vector<double> lambda_grid;
  std::vector<double> magnitudes;
  double fitted_slope = 0.0;
  double residual = 0.0;
  std::vector<FitRow> rows;
};

/**
 * Measures |I_2| = |int g d(measure) - int g dx| on a decreasing lambda grid
 * (exponential damping, truncated at X) and fits the slope of
 * log |I_2| against log(1/lambda).
 */
template <StieltjesMeasure M>
ExponentFit fit_error_exponent(const M& measure, std::span<const double> lambda_grid,
                               double X, unsigned threads = 1) {
  if (lambda_grid.size() < 6)
    throw std::domain_error("exponent fit needs at least 6 lambda values");
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] > 0.0 && lambda_grid[i] <= 3.0))
      throw std::domain_error("exponent fit lambda values must lie in (0, 3]");
    if (i > 0 && !(lambda_grid[i] < lambda_grid[i - 1]))
      throw std::domain_error("exponent fit grid must strictly decrease");
  }
  detail::check_upper_limit(measure, X);

  ExponentFit fit;
  fit.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
  fit.rows.resize(lambda_grid.size());
  for_each_block(lambda_grid.size(), threads, [&](std::size_t i) {
    const TestFunction f(lambda_grid[i], Damping::exponential);
    const auto report = split_main_error(measure, f, X);
    fit.rows[i] = {f.lambda, report.total, report.main_term, report.error_term,
                   report.truncation_bound};
  });

  std::vector<double> xs, ys;
  for (const auto& row : fit.rows) {
    const double magnitude = std::abs(row.error_term);
    if (!(magnitude > 0.0))
      throw precision_error("error term vanished at lambda = " +
                            std::to_string(row.lambda) + "; nothing to fit");
    fit.magnitudes.push_back(magnitude);
    xs.push_back(std::log(1.0 / row.lambda));
    ys.push_back(std::log(magnitude));
  }
  const auto& smallest = fit.rows.back();
  if (!(smallest.truncation_bound < 0.01 * fit.magnitudes.back()))
    throw precision_error("truncation bound " + std::to_string(smallest.truncation_bound) +
                          " is not below 1% of |I2| = " +
                          std::to_string(fit.magnitudes.back()) + " at lambda = " +
                          std::to_string(smallest.lambda) + "; increase X");
  const auto line = least_squares(xs, ys);
  fit.fitted_slope = line.slope;
  fit.residual = line.residual;
  return fit;
}

/**
 * Integrator x + R(x) whose remainder jumps by (-1)^n s n^{s-1} at every
 * integer n in [2, limit]. These jumps resonate with e^{i pi x}, so
 * |I_2(lambda)| = s sum n^{s-1} e^{-lambda n} ~ Gamma(s + 1) lambda^{-s}:
 * a remainder with planted exponent s.
 */
inline JumpMeasure planted_remainder_measure(double exponent, std::uint64_t limit) {
  if (!(exponent > 0.0)) throw std::domain_error("planted exponent must be positive");
  if (limit < 2) throw std::domain_error("planted measure needs limit >= 2");
  std::vector<Jump> jumps;
  jumps.reserve(limit - 1);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const double w = exponent * std::pow(static_cast<double>(n), exponent - 1.0);
    jumps.push_back({n, (n % 2 == 0) ? w : -w});
  }
  return JumpMeasure(1.0, std::move(jumps), limit);
}

struct ProbeRow {
  double lambda = 0.0;
  bool convergent = false;
  double value = 0.0;           // extrapolated limit, or int_1^T if divergent
  double increment_ratio = 0.0; // successive dyadic tail increments
};

struct ThresholdProbe {
  double theta = 0.5;
  std::vector<ProbeRow> rows;
  /// Midpoint between the largest divergent lambda and the smallest
  /// convergent lambda above it, when the grid brackets a switch.
  std::optional<double> empirical_threshold;
};

/**
 * Evaluates int_1^T lambda x^{theta - lambda - 1} dx over dyadic T = 2^j and
 * calls the integral convergent when the increments over successive doublings
 * shrink geometrically (ratio below 1 - 1e-6). A convergent value includes
 * the geometric extrapolation of the remaining tail.
 */
inline ThresholdProbe power_law_threshold_probe(double theta,
                                                std::span<const double> lambda_grid,
                                                int doublings = 40) {
  if (!std::isfinite(theta)) throw std::domain_error("theta must be finite");
  if (doublings < 4) throw std::domain_error("probe needs at least 4 doublings");
  ThresholdProbe probe;
  probe.theta = theta;
  for (double lambda : lambda_grid) {
    detail::require_positive_lambda(lambda);
    const double power = theta - lambda - 1.0;
    const auto integrand = [=](double x) { return lambda * std::pow(x, power); };
    CompensatedSum total;
    std::vector<double> increments;
    double lo = 1.0;
    for (int j = 0; j < doublings; ++j) {
      const double inc = integrate(integrand, lo, 2.0 * lo, 1e-14).value;
      increments.push_back(inc);
      total += inc;
      lo *= 2.0;
    }
    double ratio = 0.0;
    const std::size_t tail = 5;
    for (std::size_t k = increments.size() - tail; k < increments.size(); ++k)
      ratio += increments[k] / increments[k - 1];
    ratio /= static_cast<double>(tail);

    ProbeRow row;
    row.lambda = lambda;
    row.increment_ratio = ratio;
    row.convergent = ratio < 1.0 - 1e-6;
    row.value = total.value();
    if (row.convergent) row.value += increments.back() * ratio / (1.0 - ratio);
    probe.rows.push_back(row);
  }

  std::vector<ProbeRow> sorted = probe.rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const ProbeRow& a, const ProbeRow& b) { return a.lambda < b.lambda; });
  for (std::size_t i = sorted.size(); i-- > 1;) {
    if (!sorted[i].convergent) break;
    if (!sorted[i - 1].convergent) {
      probe.empirical_threshold = 0.5 * (sorted[i - 1].lambda + sorted[i].lambda);
      break;
    }
  }
  return probe;
}

}  // namespace erdos
