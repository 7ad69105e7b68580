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
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "erdos/asymptotics.hpp"
#include "erdos/parallel.hpp"
#include "erdos/primes.hpp"

namespace erdos {

/// A path sampled on the uniform grid first, first + step, ...
struct PathSamples {
  double first = 0.0;
  double step = 1.0;
  std::vector<double> values;

  double x(std::size_t i) const { return first + step * static_cast<double>(i); }
  std::size_t size() const { return values.size(); }
};

namespace detail {

inline std::pair<double, std::size_t> grid_extent(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::domain_error("grid step must be positive");
  if (!(hi >= lo)) throw std::domain_error("grid range is empty");
  const double first_k = std::ceil(lo / step);
  const double last_k = std::floor(hi / step);
  if (last_k < first_k) return {first_k * step, 0};
  return {first_k * step, static_cast<std::size_t>(last_k - first_k) + 1};
}

}  // namespace detail

/// Samples of an arbitrary function at the multiples of `step` in [lo, hi].
template <typename F>
PathSamples sample_function(F&& f, double lo, double hi, double step) {
  const auto [first, count] = detail::grid_extent(lo, hi, step);
  PathSamples out{first, step, {}};
  out.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.values.push_back(f(out.x(i)));
  return out;
}

/// R(x) = psi(x) - x at the multiples of `step` in [lo, hi], in one sweep.
inline PathSamples sample_remainder(const ChebyshevAccumulator& acc, double lo,
                                    double hi, double step) {
  if (hi > static_cast<double>(acc.limit()))
    throw std::out_of_range("sampling range exceeds accumulator limit " +
                            std::to_string(acc.limit()));
  if (!(lo >= 0.0)) throw std::domain_error("sampling range must start at >= 0");
  const auto [first, count] = detail::grid_extent(lo, hi, step);
  PathSamples out{first, step, {}};
  out.values.resize(count);
  const auto jumps = acc.jumps();
  std::size_t j = acc.jumps_end_at(first);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = out.x(i);
    while (j < jumps.size() && static_cast<double>(jumps[j].location) <= x) ++j;
    out.values[i] = acc.prefix_before(j) - x;
  }
  return out;
}

/// Largest sampled Hoelder ratio |R(x) - R(y)| / |x - y|^beta.
struct HolderEstimate {
  double beta = 0.5;
  double best_constant = 0.0;
  double min_separation = 1.0;
  std::size_t sample_count = 0;
  std::size_t pair_count = 0;
  std::pair<double, double> argmax_pair{0.0, 0.0};
};

/**
 * Pairs are (x_i, x_{i+m}) with m running over the powers of two (and the
 * full span), restricted to separations >= min_separation. Ties keep the
 * pair that comes first in (i, m) order, so the result does not depend on
 * the worker count.
 */
inline HolderEstimate holder_constant(const PathSamples& path, double beta,
                                      double min_separation, unsigned threads = 1) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in (0, 1]");
  if (!(min_separation >= 1.0)) throw std::domain_error("min_separation must be >= 1");
  const std::size_t n = path.size();
  if (n < 2) throw std::domain_error("Hoelder estimate needs >= 2 grid points");

  std::vector<std::size_t> offsets;
  for (std::size_t m = 1; m < n; m *= 2) {
    if (path.step * static_cast<double>(m) >= min_separation) offsets.push_back(m);
  }
  if ((offsets.empty() || offsets.back() != n - 1) &&
      path.step * static_cast<double>(n - 1) >= min_separation)
    offsets.push_back(n - 1);

  std::vector<double> denominators;
  for (std::size_t m : offsets)
    denominators.push_back(std::pow(path.step * static_cast<double>(m), beta));

  struct Best {
    double ratio = -1.0;
    std::size_t i = 0, m = 0, pairs = 0;
  };
  constexpr std::size_t block = std::size_t{1} << 16;
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<Best> partial(blocks);
  for_each_block(blocks, threads, [&](std::size_t b) {
    Best best;
    const std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) {
      for (std::size_t k = 0; k < offsets.size(); ++k) {
        const std::size_t m = offsets[k];
        if (i + m >= n) break;
        ++best.pairs;
        const double r = std::abs(path.values[i + m] - path.values[i]) / denominators[k];
        if (r > best.ratio) best = {r, i, m, best.pairs};
      }
    }
    partial[b] = best;
  });

  Best best;
  std::size_t pairs = 0;
  for (const auto& p : partial) {
    pairs += p.pairs;
    if (p.ratio > best.ratio) best = p;
  }

  HolderEstimate out;
  out.beta = beta;
  out.min_separation = min_separation;
  out.sample_count = n;
  out.pair_count = pairs;
  if (best.ratio >= 0.0) {
    out.best_constant = best.ratio;
    out.argmax_pair = {path.x(best.i), path.x(best.i + best.m)};
  }
  return out;
}

inline HolderEstimate holder_constant(const ChebyshevAccumulator& acc, double beta,
                                      double lo, double hi, double step,
                                      double min_separation, unsigned threads = 1) {
  return holder_constant(sample_remainder(acc, lo, hi, step), beta, min_separation,
                         threads);
}

struct ScalingRow {
  double h = 0.0;
  double max_increment = 0.0;
  double at_x = 0.0;  // left end of a maximising window
};

struct ScalingProfile {
  std::vector<ScalingRow> rows;
  double slope = 0.0;     // log-log slope of max_increment against h
  double residual = 0.0;
};

/// For each window h (a multiple of the grid step), the largest |R(x+h) - R(x)|
/// over the grid. A window wider than the range degenerates to the single
/// window spanning it.
inline ScalingProfile scaling_profile(const PathSamples& path,
                                      std::span<const double> window_sizes,
                                      unsigned threads = 1) {
  const std::size_t n = path.size();
  if (n < 2) throw std::domain_error("scaling profile needs >= 2 grid points");
  ScalingProfile profile;
  profile.rows.resize(window_sizes.size());
  for (double h : window_sizes) {
    if (!(h >= 1.0)) throw std::domain_error("window sizes must be >= 1");
    const double m = h / path.step;
    if (std::abs(m - std::round(m)) > 1e-9 * m)
      throw std::domain_error("window " + std::to_string(h) +
                              " is not a multiple of the grid step");
  }
  for_each_block(window_sizes.size(), threads, [&](std::size_t k) {
    const double h = window_sizes[k];
    const auto m = static_cast<std::size_t>(std::llround(h / path.step));
    ScalingRow row{h, 0.0, path.first};
    if (m >= n) {
      row.max_increment = std::abs(path.values.back() - path.values.front());
    } else {
      for (std::size_t i = 0; i + m < n; ++i) {
        const double inc = std::abs(path.values[i + m] - path.values[i]);
        if (inc > row.max_increment) {
          row.max_increment = inc;
          row.at_x = path.x(i);
        }
      }
    }
    profile.rows[k] = row;
  });

  std::vector<double> xs, ys;
  for (const auto& row : profile.rows) {
    if (row.max_increment > 0.0) {
      xs.push_back(std::log(row.h));
      ys.push_back(std::log(row.max_increment));
    }
  }
  if (xs.size() >= 2) {
    const auto line = least_squares(xs, ys);
    profile.slope = line.slope;
    profile.residual = line.residual;
  }
  return profile;
}

/// Profile of R = psi - x sampled at every integer in [0, x_max].
inline ScalingProfile scaling_profile(const ChebyshevAccumulator& acc, double x_max,
                                      std::span<const double> window_sizes,
                                      unsigned threads = 1) {
  return scaling_profile(sample_remainder(acc, 0.0, x_max, 1.0), window_sizes, threads);
}

/// 1, 2, 4, ... up to and including the largest power of two <= h_max.
inline std::vector<double> dyadic_windows(double h_max) {
  std::vector<double> out;
  for (double h = 1.0; h <= h_max; h *= 2.0) out.push_back(h);
  return out;
}

}  // namespace erdos
