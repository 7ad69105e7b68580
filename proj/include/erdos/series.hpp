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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/parallel.hpp"
#include "erdos/primes.hpp"
#include "erdos/summation.hpp"

namespace erdos {

enum class AccelerationMethod { none, pair_average, iterated_average };

inline const char* to_string(AccelerationMethod method) {
  switch (method) {
    case AccelerationMethod::none: return "none";
    case AccelerationMethod::pair_average: return "pair-average";
    case AccelerationMethod::iterated_average: return "iterated-average";
  }
  return "unknown";
}

struct SeriesResult {
  std::size_t terms_used = 0;
  double raw_partial_sum = 0.0;
  double accelerated_value = 0.0;
  AccelerationMethod method = AccelerationMethod::none;
  int rounds = 0;
  double estimated_uncertainty = 0.0;
};

/**
 * Smooths the tail of a partial-sum sequence by repeated midpoints
 * s_i <- (s_i + s_{i+1}) / 2. `pair_average` is a single round,
 * `iterated_average` applies `rounds` rounds. The uncertainty is the change
 * in the final element caused by the last round (for `none`, the last term).
 */
inline SeriesResult accelerate(std::span<const double> partial_sums,
                               AccelerationMethod method, int rounds,
                               std::size_t terms_used = 0) {
  if (partial_sums.size() < 2)
    throw std::domain_error("acceleration needs at least two partial sums");
  if (rounds < 1) throw std::domain_error("acceleration needs rounds >= 1");

  SeriesResult out;
  out.terms_used = terms_used ? terms_used : partial_sums.size();
  out.raw_partial_sum = partial_sums.back();
  out.method = method;

  if (method == AccelerationMethod::none) {
    out.rounds = 0;
    out.accelerated_value = partial_sums.back();
    out.estimated_uncertainty =
        std::abs(partial_sums.back() - partial_sums[partial_sums.size() - 2]);
    return out;
  }

  const int applied = method == AccelerationMethod::pair_average ? 1 : rounds;
  if (partial_sums.size() < static_cast<std::size_t>(applied) + 1)
    throw std::domain_error("sequence of " + std::to_string(partial_sums.size()) +
                            " partial sums is too short for " +
                            std::to_string(applied) + " rounds");

  std::vector<double> level(partial_sums.begin(), partial_sums.end());
  double previous_last = level.back();
  for (int r = 0; r < applied; ++r) {
    previous_last = level.back();
    for (std::size_t i = 0; i + 1 < level.size(); ++i)
      level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
  }
  out.rounds = applied;
  out.accelerated_value = level.back();
  out.estimated_uncertainty = std::abs(level.back() - previous_last);
  return out;
}

namespace detail {

inline constexpr std::size_t kSeriesBlock = std::size_t{1} << 16;

// Sum of term(n) for n in [1, count], accumulated per fixed-size index block
// and merged in block order; identical for every thread count.
template <typename Term>
CompensatedSum indexed_sum(const Term& term, std::size_t count, unsigned threads) {
  const std::size_t blocks = (count + kSeriesBlock - 1) / kSeriesBlock;
  std::vector<CompensatedSum> partial(blocks);
  for_each_block(blocks, threads, [&](std::size_t b) {
    const std::size_t first = b * kSeriesBlock + 1;
    const std::size_t last = std::min(count, (b + 1) * kSeriesBlock);
    CompensatedSum acc;
    for (std::size_t n = first; n <= last; ++n) acc += term(n);
    partial[b] = acc;
  });
  CompensatedSum total;
  for (const auto& block : partial) total += block;
  return total;
}

// Partial sums s_{end-length+1}, ..., s_end.
template <typename Term>
std::vector<double> tail_sums(const Term& term, std::size_t end, std::size_t length,
                              unsigned threads) {
  const std::size_t first = end - length + 1;
  CompensatedSum acc = indexed_sum(term, first, threads);
  std::vector<double> out;
  out.reserve(length);
  out.push_back(acc.value());
  for (std::size_t n = first + 1; n <= end; ++n) {
    acc += term(n);
    out.push_back(acc.value());
  }
  return out;
}

}  // namespace detail

/// The n-th term (-1)^n n / p_n.
inline double erdos_term(const PrimeTable& table, std::size_t n) {
  const double magnitude = static_cast<double>(n) / static_cast<double>(table.nth(n));
  return (n % 2 == 0) ? magnitude : -magnitude;
}

/// The n-th term (-1)^n / (n^theta (p_{n+1} - p_n)).
inline double gap_term(const PrimeTable& table, double theta, std::size_t n) {
  const auto primes = table.primes();
  const double gap = static_cast<double>(primes[n] - primes[n - 1]);
  const double magnitude = 1.0 / (std::pow(static_cast<double>(n), theta) * gap);
  return (n % 2 == 0) ? magnitude : -magnitude;
}

inline double erdos_partial_sum(const PrimeTable& table, std::size_t terms,
                                unsigned threads = 1) {
  if (terms == 0) throw std::domain_error("need at least one term");
  if (terms > table.size())
    throw capacity_error("Erdos series needs " + std::to_string(terms) +
                         " primes, table holds " + std::to_string(table.size()));
  return detail::indexed_sum([&](std::size_t n) { return erdos_term(table, n); },
                             terms, threads)
      .value();
}

inline double gap_series_partial(const PrimeTable& table, double theta,
                                 std::size_t terms, unsigned threads = 1) {
  if (terms == 0) throw std::domain_error("need at least one term");
  if (!(theta > 0.0)) throw std::domain_error("gap series needs theta > 0");
  if (terms + 1 > table.size())
    throw capacity_error("gap series needs " + std::to_string(terms + 1) +
                         " primes, table holds " + std::to_string(table.size()));
  return detail::indexed_sum(
             [&](std::size_t n) { return gap_term(table, theta, n); }, terms, threads)
      .value();
}

/// One row of the convergence trace: the estimate after `terms` terms.
struct Checkpoint {
  std::size_t terms = 0;
  double raw_partial_sum = 0.0;
  double accelerated_value = 0.0;
  double step_uncertainty = 0.0;  // last-round change
  double uncertainty = 0.0;       // max(step, drift from previous checkpoint)
};

/**
 * Limit estimate with diagnostics. `result` describes the final checkpoint;
 * its uncertainty is the larger of the last-round change and the drift of the
 * accelerated value since the previous (half-size) checkpoint.
 */
struct SeriesEstimate {
  SeriesResult result;
  std::vector<Checkpoint> checkpoints;  // ascending in terms
  double opposite_parity_value = 0.0;   // accelerated estimate at terms - 1

  /// True when the estimates at the two final parities enclose `target`.
  bool parity_brackets(double target) const {
    const double lo = std::min(result.accelerated_value, opposite_parity_value);
    const double hi = std::max(result.accelerated_value, opposite_parity_value);
    return lo <= target && target <= hi;
  }
};

namespace detail {

template <typename Term>
SeriesEstimate estimate_limit(const Term& term, std::size_t terms,
                              AccelerationMethod method, int rounds,
                              unsigned threads) {
  if (rounds < 1) throw std::domain_error("acceleration needs rounds >= 1");
  const int applied = method == AccelerationMethod::iterated_average ? rounds : 1;
  const std::size_t window = static_cast<std::size_t>(applied) + 2;
  if (terms < window + 1)
    throw std::domain_error("too few terms (" + std::to_string(terms) +
                            ") for the requested acceleration");

  std::vector<std::size_t> sizes;
  for (std::size_t n = terms; n >= std::max<std::size_t>(window + 1, 16) &&
                              sizes.size() < 12;
       n /= 2)
    sizes.push_back(n);
  if (sizes.empty()) sizes.push_back(terms);
  std::reverse(sizes.begin(), sizes.end());

  SeriesEstimate est;
  std::vector<double> final_window;
  for (std::size_t n : sizes) {
    final_window = tail_sums(term, n, window, threads);
    const auto at_n = accelerate(final_window, method, rounds, n);
    Checkpoint row{n, at_n.raw_partial_sum, at_n.accelerated_value,
                   at_n.estimated_uncertainty, at_n.estimated_uncertainty};
    if (!est.checkpoints.empty()) {
      const double drift =
          std::abs(row.accelerated_value - est.checkpoints.back().accelerated_value);
      row.uncertainty = std::max(row.uncertainty, drift);
    }
    est.checkpoints.push_back(row);
  }

  const auto& last = est.checkpoints.back();
  est.result = accelerate(final_window, method, rounds, terms);
  est.result.estimated_uncertainty = last.uncertainty;
  const std::span<const double> shifted(final_window.data(), final_window.size() - 1);
  est.opposite_parity_value = method == AccelerationMethod::none
                                  ? shifted.back()
                                  : accelerate(shifted, method, rounds).accelerated_value;
  return est;
}

}  // namespace detail

inline SeriesEstimate estimate_erdos_series(const PrimeTable& table, std::size_t terms,
                                            AccelerationMethod method, int rounds,
                                            unsigned threads = 1) {
  if (terms > table.size())
    throw capacity_error("Erdos series needs " + std::to_string(terms) +
                         " primes, table holds " + std::to_string(table.size()));
  return detail::estimate_limit(
      [&](std::size_t n) { return erdos_term(table, n); }, terms, method, rounds,
      threads);
}

inline SeriesEstimate estimate_gap_series(const PrimeTable& table, double theta,
                                          std::size_t terms, AccelerationMethod method,
                                          int rounds, unsigned threads = 1) {
  if (!(theta > 0.0)) throw std::domain_error("gap series needs theta > 0");
  if (terms + 1 > table.size())
    throw capacity_error("gap series needs " + std::to_string(terms + 1) +
                         " primes, table holds " + std::to_string(table.size()));
  return detail::estimate_limit(
      [&](std::size_t n) { return gap_term(table, theta, n); }, terms, method, rounds,
      threads);
}

}  // namespace erdos
