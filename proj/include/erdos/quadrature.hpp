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
#include <complex>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "erdos/error.hpp"

namespace erdos {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on a finite interval.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-12,
                           unsigned max_depth = 15) {
  QuadratureResult out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, max_depth, rel_tol, &out.error);
  return out;
}

/// As integrate(), but throws precision_error when the error estimate misses
/// the requested relative tolerance by more than a factor of 10.
template <typename F>
double integrate_checked(F&& f, double a, double b, double rel_tol = 1e-12) {
  const auto r = integrate(f, a, b, rel_tol);
  const double allowed = 10.0 * rel_tol * std::abs(r.value) +
                         std::numeric_limits<double>::min();
  if (!(r.error <= allowed))
    throw precision_error("quadrature on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] reached error " +
                          std::to_string(r.error));
  return r.value;
}

template <typename F>
std::complex<double> integrate_complex(F&& f, double a, double b,
                                       double rel_tol = 1e-12, unsigned max_depth = 15) {
  const auto re = integrate([&](double x) { return f(x).real(); }, a, b, rel_tol, max_depth);
  const auto im = integrate([&](double x) { return f(x).imag(); }, a, b, rel_tol, max_depth);
  return {re.value, im.value};
}

}  // namespace erdos
