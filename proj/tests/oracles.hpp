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

// Independent reference computations for the test suites. Nothing here calls
// into the library's numerical code.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_by_trial(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (prime_by_trial(n)) out.push_back(n);
  }
  return out;
}

/// Lambda(n) by full factorisation.
inline double mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      factors.push_back(d);
      m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (auto f : factors) {
    if (f != factors.front()) return 0.0;
  }
  return std::log(static_cast<double>(factors.front()));
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        break;
      }
    }
  }
  return {x, w};
}

/// Composite 20-point Gauss-Legendre over `panels` equal panels.
template <typename T>
T composite_gauss(const std::function<T(double)>& f, double a, double b, int panels) {
  static const auto rule = gauss_legendre(20);
  const double h = (b - a) / panels;
  T total{};
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    T piece{};
    for (std::size_t i = 0; i < rule.first.size(); ++i)
      piece += rule.second[i] * f(lo + 0.5 * h * (rule.first[i] + 1.0));
    total += 0.5 * h * piece;
  }
  return total;
}

/// Romberg-refined trapezoid rule.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int levels = 22) {
  std::vector<std::vector<double>> r(levels, std::vector<double>(levels));
  double h = b - a;
  r[0][0] = 0.5 * h * (f(a) + f(b));
  for (int i = 1; i < levels; ++i) {
    h *= 0.5;
    double sum = 0.0;
    const long count = 1L << (i - 1);
    for (long k = 1; k <= count; ++k) sum += f(a + (2 * k - 1) * h);
    r[i][0] = 0.5 * r[i - 1][0] + h * sum;
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 4.0;
      r[i][j] = r[i][j - 1] + (r[i][j - 1] - r[i - 1][j - 1]) / (factor - 1.0);
    }
    if (i > 5 && std::abs(r[i][i] - r[i - 1][i - 1]) < 1e-14 * std::abs(r[i][i]))
      return r[i][i];
  }
  return r[levels - 1][levels - 1];
}

/// p-variation by enumerating every subset of interior points (both endpoints
/// kept).
inline double p_variation_exhaustive(const std::vector<double>& values, double p) {
  const std::size_t n = values.size();
  const std::size_t interior = n - 2;
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
    double sum = 0.0;
    std::size_t prev = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const bool keep = (i == n - 1) || ((mask >> (i - 1)) & 1);
      if (!keep) continue;
      sum += std::pow(std::abs(values[i] - values[prev]), p);
      prev = i;
    }
    best = std::max(best, sum);
  }
  return std::pow(best, 1.0 / p);
}

}  // namespace oracle
