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
#include <concepts>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/primes.hpp"
#include "erdos/quadrature.hpp"
#include "erdos/summation.hpp"

namespace erdos {

using complex = std::complex<double>;

/// An integrator of the form drift * x + (sum of integer-located jumps).
/// Only jumps with location in (1, X] take part in an integral over [1, X].
template <typename M>
concept StieltjesMeasure = requires(const M& m) {
  { m.jumps() } -> std::convertible_to<std::span<const Jump>>;
  { m.drift() } -> std::convertible_to<double>;
  { m.limit() } -> std::convertible_to<std::uint64_t>;
};

/// Hand-built integrator, mainly for planted-exponent experiments.
class JumpMeasure {
 public:
  JumpMeasure(double drift, std::vector<Jump> jumps, std::uint64_t limit)
      : drift_(drift), jumps_(std::move(jumps)), limit_(limit) {
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
      if (jumps_[i].location < 2 || jumps_[i].location > limit_)
        throw std::domain_error("jump locations must lie in [2, limit]");
      if (i > 0 && jumps_[i].location <= jumps_[i - 1].location)
        throw std::domain_error("jump locations must be strictly increasing");
    }
  }

  double drift() const { return drift_; }
  std::span<const Jump> jumps() const { return jumps_; }
  std::uint64_t limit() const { return limit_; }

 private:
  double drift_;
  std::vector<Jump> jumps_;
  std::uint64_t limit_;
};

enum class Damping { exponential, power_law };

inline const char* to_string(Damping damping) {
  return damping == Damping::exponential ? "exponential" : "power-law";
}

/// g(x) = e^{i pi x} e^{-lambda x}, or e^{i pi x} x^{-lambda} for power-law.
struct TestFunction {
  double lambda;
  Damping damping;

  TestFunction(double lambda_, Damping damping_ = Damping::exponential)
      : lambda(lambda_), damping(damping_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw std::domain_error("damping rate lambda must be positive");
  }

  double decay(double x) const {
    return damping == Damping::exponential ? std::exp(-lambda * x)
                                           : std::pow(x, -lambda);
  }
};

/// e^{i pi x}, with the argument reduced modulo 2 exactly before the
/// trigonometric call, so integers give exactly +-1.
inline complex cis_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0) return {1.0, 0.0};
  if (r == 0.5) return {0.0, 1.0};
  if (r == 1.0) return {-1.0, 0.0};
  if (r == 1.5) return {0.0, -1.0};
  // Fold to [-1/2, 1/2] around the nearest of 0, 1, 2 for accuracy.
  double sign = 1.0;
  if (r > 1.5) {
    r -= 2.0;
  } else if (r > 0.5) {
    r -= 1.0;
    sign = -1.0;
  }
  const double angle = std::numbers::pi * r;
  return {sign * std::cos(angle), sign * std::sin(angle)};
}

inline complex evaluate_g(const TestFunction& f, double x) {
  if (!(x >= 1.0)) throw std::domain_error("g is defined for x >= 1");
  return cis_pi(x) * f.decay(x);
}

/// g at an integer, where the oscillation is exactly (-1)^n.
inline complex g_at(const TestFunction& f, std::uint64_t n) {
  const double magnitude = f.decay(static_cast<double>(n));
  return {(n % 2 == 0) ? magnitude : -magnitude, 0.0};
}

namespace detail {

// Panels of unit width resolve the half-period of e^{i pi x} comfortably.
// A panel whose real or imaginary part nearly cancels can never meet a
// relative tolerance, so the bisection depth is capped.
inline complex oscillatory_power_panels(double lambda, double a, double b) {
  CompensatedComplexSum acc;
  for (double lo = a; lo < b;) {
    const double hi = std::min(b, std::floor(lo) + 1.0);
    acc += integrate_complex(
        [lambda](double x) { return cis_pi(x) * std::pow(x, -lambda); }, lo, hi,
        1e-14, 6);
    lo = hi;
  }
  return acc.value();
}

inline double oscillatory_tail_start(double lambda) { return 64.0 + 2.0 * lambda; }

// int_a^inf e^{i pi x} x^{-lambda} dx for a >= oscillatory_tail_start, by the
// integration-by-parts expansion -e^{i pi a} a^{-lambda}/(i pi) * sum (lambda)_k/(i pi a)^k.
inline complex oscillatory_power_tail(double lambda, double a) {
  const complex z(0.0, std::numbers::pi * a);
  complex term(1.0, 0.0);
  complex sum = term;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    term *= (lambda + k) / z;
    const double size = std::abs(term);
    if (size < 1e-18) break;
    if (size > previous) {
      if (size > 1e-14) throw precision_error("oscillatory tail expansion diverged");
      break;
    }
    previous = size;
    sum += term;
  }
  return -cis_pi(a) * std::pow(a, -lambda) / complex(0.0, std::numbers::pi) * sum;
}

}  // namespace detail

/**
 * int_1^X g(x) dx in closed form for exponential damping. For power-law
 * damping the integral is assembled from unit-panel Gauss-Kronrod near 1 and
 * an asymptotic tail expansion beyond ~64; absolute accuracy ~1e-13.
 */
inline complex smooth_integral(const TestFunction& f, double X) {
  if (!(X >= 1.0)) throw std::domain_error("upper limit must be >= 1");
  if (f.damping == Damping::exponential) {
    const complex c(-f.lambda, std::numbers::pi);
    const complex at_x = cis_pi(X) * std::exp(-f.lambda * X);
    const complex at_one = -std::exp(-f.lambda);
    return (at_x - at_one) / c;
  }
  const double start = detail::oscillatory_tail_start(f.lambda);
  if (X <= start) return detail::oscillatory_power_panels(f.lambda, 1.0, X);
  const complex head = detail::oscillatory_power_panels(f.lambda, 1.0, start);
  return head + detail::oscillatory_power_tail(f.lambda, start) -
         detail::oscillatory_power_tail(f.lambda, X);
}

/// Bound on |int_X^inf g d(psi)| assuming the integrator's total variation on
/// [1, t] is at most 2t. Infinite when the tail is not absolutely convergent.
inline double truncation_bound(const TestFunction& f, double X) {
  if (f.damping == Damping::exponential)
    return 2.0 * std::exp(-f.lambda * X) * (X + 1.0 / f.lambda);
  if (f.lambda <= 1.0) return std::numeric_limits<double>::infinity();
  return 2.0 * f.lambda * std::pow(X, 1.0 - f.lambda) / (f.lambda - 1.0);
}

namespace detail {

template <StieltjesMeasure M>
void check_upper_limit(const M& measure, double X) {
  if (!(X >= 1.0)) throw std::domain_error("integration limit must be >= 1");
  if (X > static_cast<double>(measure.limit()))
    throw std::out_of_range("integration limit " + std::to_string(X) +
                            " exceeds integrator range " +
                            std::to_string(measure.limit()));
}

template <StieltjesMeasure M>
std::size_t jumps_through(const M& measure, double X) {
  const auto jumps = measure.jumps();
  const double floor_x = std::floor(X);
  return static_cast<std::size_t>(
      std::upper_bound(jumps.begin(), jumps.end(), floor_x,
                       [](double v, const Jump& j) {
                         return v < static_cast<double>(j.location);
                       }) -
      jumps.begin());
}

}  // namespace detail

/// int_1^X g d(measure), evaluated exactly as a weighted jump sum (plus the
/// closed-form drift part, if any).
template <StieltjesMeasure M>
complex stieltjes_integral(const M& measure, const TestFunction& f, double X) {
  detail::check_upper_limit(measure, X);
  const auto jumps = measure.jumps();
  const std::size_t count = detail::jumps_through(measure, X);
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < count; ++i) {
    if (jumps[i].location < 2) continue;
    acc += jumps[i].weight * g_at(f, jumps[i].location);
  }
  if (measure.drift() != 0.0) acc += measure.drift() * smooth_integral(f, X);
  return acc.value();
}

/**
 * g(X) F(X) - g(1) F(1) - int_1^X F g' dx for a pure-jump F. Between
 * consecutive jumps F is constant, so each piece of the last integral is
 * exactly F * (g(b) - g(a)); no quadrature is involved.
 */
template <StieltjesMeasure M>
complex integral_by_parts(const M& measure, const TestFunction& f, double X) {
  if (f.damping != Damping::exponential)
    throw std::domain_error("integration by parts is provided for exponential damping");
  if (measure.drift() != 0.0)
    throw std::domain_error("integration by parts needs a pure-jump integrator");
  detail::check_upper_limit(measure, X);
  const auto jumps = measure.jumps();
  const std::size_t count = detail::jumps_through(measure, X);

  CompensatedSum level;  // F on the current piece; F(1) = 0
  CompensatedComplexSum pieces;
  for (std::size_t i = 0; i < count; ++i) {
    level += jumps[i].weight;
    const complex left = g_at(f, jumps[i].location);
    const complex right = (i + 1 < count) ? g_at(f, jumps[i + 1].location)
                                          : evaluate_g(f, X);
    pieces += level.value() * (right - left);
  }
  return evaluate_g(f, X) * level.value() - pieces.value();
}

/// Split of int_1^X g d(psi) into the smooth main part int_1^X g dx and the
/// remainder part int_1^X g dR with R = psi - x.
struct IntegralReport {
  double lambda = 0.0;
  Damping damping = Damping::exponential;
  complex total;
  complex main_term;
  complex error_term;
  double truncation_X = 0.0;
  double truncation_bound = 0.0;
};

template <StieltjesMeasure M>
IntegralReport split_main_error(const M& measure, const TestFunction& f, double X) {
  IntegralReport report;
  report.lambda = f.lambda;
  report.damping = f.damping;
  report.total = stieltjes_integral(measure, f, X);
  report.main_term = smooth_integral(f, X);
  report.error_term = report.total - report.main_term;
  report.truncation_X = X;
  report.truncation_bound = truncation_bound(f, X);
  return report;
}

struct YoungResult {
  bool satisfied = false;
  double margin = 0.0;
};

/// Young's existence condition for int f dg with f in C^alpha, g in C^beta.
inline YoungResult young_criterion(double alpha, double beta) {
  const auto in_range = [](double e) { return e > 0.0 && e <= 1.0; };
  if (!in_range(alpha) || !in_range(beta))
    throw std::domain_error("Hoelder exponents must lie in (0, 1]");
  const double margin = alpha + beta - 1.0;
  return {margin > 0.0, margin};
}

struct Sample {
  double x;
  double value;
};

/**
 * p-variation restricted to partitions drawn from the sample points:
 * best[j] = max_{i<j} best[i] + |v_j - v_i|^p, answer best[n-1]^{1/p}.
 * Both endpoints can always be added without lowering the sum, so the chain
 * from the first to the last sample is the supremum. O(n^2).
 */
inline double p_variation(std::span<const Sample> samples, double p) {
  if (samples.size() < 2) throw std::domain_error("p-variation needs >= 2 samples");
  if (!(p >= 1.0)) throw std::domain_error("p-variation needs p >= 1");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].x > samples[i - 1].x))
      throw std::domain_error("sample abscissae must be strictly increasing");
  }
  std::vector<double> best(samples.size(), 0.0);
  for (std::size_t j = 1; j < samples.size(); ++j) {
    double top = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      const double step = std::abs(samples[j].value - samples[i].value);
      top = std::max(top, best[i] + std::pow(step, p));
    }
    best[j] = top;
  }
  return std::pow(best.back(), 1.0 / p);
}

}  // namespace erdos
