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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "erdos/error.hpp"

namespace erdos {

namespace detail {

inline constexpr double kGammaEps = 1e-16;
inline constexpr int kGammaMaxIter = 100000;

// Lower incomplete gamma by its power series; fine for x < a.
inline double lower_gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kGammaMaxIter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kGammaEps)
      return sum * std::exp(a * std::log(x) - x);
  }
  throw precision_error("incomplete gamma series did not converge");
}

// Upper incomplete gamma by the Legendre continued fraction, evaluated with
// the modified Lentz method; fine for x >= a.
inline double upper_gamma_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kGammaMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kGammaEps)
      return h * std::exp(a * std::log(x) - x);
  }
  throw precision_error("incomplete gamma continued fraction did not converge");
}

}  // namespace detail

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt.
inline double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("incomplete gamma needs a > 0");
  if (!(x >= 0.0)) throw std::domain_error("incomplete gamma needs x >= 0");
  if (x == 0.0) return std::tgamma(a);
  if (x < a) return std::tgamma(a) - detail::lower_gamma_series(a, x);
  return detail::upper_gamma_fraction(a, x);
}

/// Regularised Q(a, x) = Gamma(a, x) / Gamma(a).
inline double regularized_upper_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("incomplete gamma needs a > 0");
  if (!(x >= 0.0)) throw std::domain_error("incomplete gamma needs x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a) return 1.0 - detail::lower_gamma_series(a, x) / std::tgamma(a);
  return detail::upper_gamma_fraction(a, x) / std::tgamma(a);
}

}  // namespace erdos
