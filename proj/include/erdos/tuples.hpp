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
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "erdos/asymptotics.hpp"
#include "erdos/error.hpp"
#include "erdos/parallel.hpp"
#include "erdos/primes.hpp"
#include "erdos/quadrature.hpp"
#include "erdos/summation.hpp"

namespace erdos {

/// Offsets h_1 < ... < h_k of a prime tuple.
class TupleSpec {
 public:
  explicit TupleSpec(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) throw std::domain_error("a tuple needs at least one offset");
    for (std::size_t i = 1; i < offsets_.size(); ++i) {
      if (offsets_[i] <= offsets_[i - 1])
        throw std::domain_error("tuple offsets must be strictly increasing");
    }
  }

  /// Parses "0,2,6".
  static TupleSpec parse(std::string_view text) {
    std::vector<std::uint64_t> offsets;
    while (!text.empty()) {
      const auto comma = text.find(',');
      std::string_view item = text.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      std::uint64_t value = 0;
      const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || end != item.data() + item.size())
        throw std::domain_error("bad tuple offset '" + std::string(item) + "'");
      offsets.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return TupleSpec(std::move(offsets));
  }

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::size_t k() const { return offsets_.size(); }
  std::uint64_t max_offset() const { return offsets_.back(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(offsets_[i]);
    }
    return out;
  }

  /// nu(p) < p for every prime p <= k (larger p cannot be covered).
  bool admissible() const;

 private:
  std::vector<std::uint64_t> offsets_;
};

/// Number of distinct residues of the offsets modulo the prime p.
inline std::size_t nu(const TupleSpec& tuple, std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> residues;
  residues.reserve(tuple.k());
  for (std::uint64_t h : tuple.offsets()) residues.push_back(h % p);
  std::sort(residues.begin(), residues.end());
  return static_cast<std::size_t>(std::unique(residues.begin(), residues.end()) -
                                  residues.begin());
}

inline bool TupleSpec::admissible() const {
  for (std::uint64_t p = 2; p <= k(); ++p) {
    if (is_prime(p) && nu(*this, p) == p) return false;
  }
  return true;
}

/// `standard`: prod (1 - nu/p)(1 - 1/p)^{-k}. `kth_power`: prod (1 - nu/p)^k,
/// which tends to 0 as the cutoff grows and is kept only for comparison.
enum class SingularSeriesForm { standard, kth_power };

inline const char* to_string(SingularSeriesForm form) {
  return form == SingularSeriesForm::standard ? "standard" : "kth-power";
}

/// Euler product over the primes of `primes` up to `cutoff`, summed in log space.
inline double singular_series(const TupleSpec& tuple, const PrimeTable& primes,
                              std::uint64_t cutoff,
                              SingularSeriesForm form = SingularSeriesForm::standard) {
  if (cutoff < 2) throw std::domain_error("singular series cutoff must be >= 2");
  if (cutoff > primes.limit())
    throw capacity_error("singular series cutoff exceeds prime table limit");
  const double k = static_cast<double>(tuple.k());
  CompensatedSum log_product;
  for (std::uint64_t p : primes.primes()) {
    if (p > cutoff) break;
    // Beyond the largest offset all residues are distinct, nu = k.
    const std::size_t v = p > tuple.max_offset() ? tuple.k() : nu(tuple, p);
    if (v == p) return 0.0;
    const double pd = static_cast<double>(p);
    const double local = std::log1p(-static_cast<double>(v) / pd);
    if (form == SingularSeriesForm::standard) {
      log_product += local - k * std::log1p(-1.0 / pd);
    } else {
      log_product += k * local;
    }
  }
  return std::exp(log_product.value());
}

inline double singular_series(const TupleSpec& tuple, std::uint64_t cutoff,
                              SingularSeriesForm form = SingularSeriesForm::standard) {
  if (cutoff < 2) throw std::domain_error("singular series cutoff must be >= 2");
  return singular_series(tuple, sieve(cutoff), cutoff, form);
}

namespace detail {

inline std::vector<bool> prime_bitmap(const PrimeTable& table, std::uint64_t upto) {
  std::vector<bool> bits(upto + 1, false);
  for (std::uint64_t p : table.primes()) {
    if (p > upto) break;
    bits[p] = true;
  }
  return bits;
}

}  // namespace detail

/// Counts n <= x (n >= 1) with every n + h_i prime, at each x of an ascending
/// list, in a single pass.
inline std::vector<std::uint64_t> tuple_counts(const PrimeTable& table,
                                               const TupleSpec& tuple,
                                               std::span<const std::uint64_t> xs,
                                               unsigned threads = 1) {
  if (xs.empty()) return {};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1]) throw std::domain_error("x values must be ascending");
  }
  const std::uint64_t top = xs.back();
  if (top + tuple.max_offset() > table.limit())
    throw capacity_error("tuple count up to " + std::to_string(top) +
                         " needs primes to " + std::to_string(top + tuple.max_offset()) +
                         ", table limit is " + std::to_string(table.limit()));
  const auto bits = detail::prime_bitmap(table, top + tuple.max_offset());
  const auto offsets = tuple.offsets();
  const auto hit = [&](std::uint64_t n) {
    for (std::uint64_t h : offsets) {
      if (!bits[n + h]) return false;
    }
    return true;
  };

  // Counts per segment between consecutive x values, then prefix sums.
  std::vector<std::uint64_t> segment(xs.size(), 0);
  for_each_block(xs.size(), threads, [&](std::size_t s) {
    const std::uint64_t lo = s == 0 ? 1 : xs[s - 1] + 1;
    std::uint64_t c = 0;
    for (std::uint64_t n = lo; n <= xs[s]; ++n) c += hit(n) ? 1 : 0;
    segment[s] = c;
  });
  std::vector<std::uint64_t> out(xs.size());
  std::uint64_t running = 0;
  for (std::size_t s = 0; s < xs.size(); ++s) out[s] = running += segment[s];
  return out;
}

inline std::uint64_t tuple_count(const PrimeTable& table, const TupleSpec& tuple,
                                 std::uint64_t x, unsigned threads = 1) {
  // Split [1, x] into fixed chunks so workers share the load.
  constexpr std::uint64_t chunk = std::uint64_t{1} << 18;
  std::vector<std::uint64_t> xs;
  for (std::uint64_t c = chunk; c < x; c += chunk) xs.push_back(c);
  xs.push_back(x);
  return tuple_counts(table, tuple, xs, threads).back();
}

/// int_2^x dy / log^k y, via y = e^u and adaptive Gauss-Kronrod (relative 1e-12).
inline double log_power_integral(double x, int k) {
  if (!(x > 2.0)) throw std::domain_error("log-power integral needs x > 2");
  if (k < 1) throw std::domain_error("log-power integral needs k >= 1");
  return integrate_checked(
      [k](double u) { return std::exp(u) / std::pow(u, k); }, std::log(2.0),
      std::log(x), 1e-12);
}

struct DiscrepancyRecord {
  std::uint64_t x = 0;
  std::uint64_t lhs_count = 0;
  double singular_series = 0.0;
  double integral_term = 0.0;
  double discrepancy = 0.0;
  bool k_in_regime = false;        // k <= (log log x)^5
  bool offsets_in_regime = false;  // all offsets <= log^2 x
};

struct DiscrepancyScan {
  TupleSpec tuple;
  SingularSeriesForm form = SingularSeriesForm::standard;
  std::uint64_t cutoff = 0;
  std::vector<DiscrepancyRecord> records;
  std::optional<double> fitted_slope;  // log |discrepancy| against log x
  double residual = 0.0;
  std::size_t excluded_zero = 0;
};

inline DiscrepancyScan discrepancy_scan(const PrimeTable& table, const TupleSpec& tuple,
                                        std::span<const std::uint64_t> x_grid,
                                        SingularSeriesForm form = SingularSeriesForm::standard,
                                        std::uint64_t cutoff = 1'000'000,
                                        unsigned threads = 1) {
  if (x_grid.empty()) throw std::domain_error("discrepancy scan needs x values");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (x_grid[i] <= 2) throw std::domain_error("discrepancy scan needs x > 2");
    if (i > 0 && x_grid[i] <= x_grid[i - 1])
      throw std::domain_error("discrepancy grid must be increasing");
  }
  const double s = cutoff <= table.limit() ? singular_series(tuple, table, cutoff, form)
                                           : singular_series(tuple, cutoff, form);
  const auto counts = tuple_counts(table, tuple, x_grid, threads);

  DiscrepancyScan scan{tuple, form, cutoff, {}, std::nullopt, 0.0, 0};
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    DiscrepancyRecord r;
    r.x = x_grid[i];
    r.lhs_count = counts[i];
    r.singular_series = s;
    r.integral_term = log_power_integral(static_cast<double>(r.x), static_cast<int>(tuple.k()));
    r.discrepancy = static_cast<double>(r.lhs_count) - s * r.integral_term;
    const double logx = std::log(static_cast<double>(r.x));
    r.k_in_regime = static_cast<double>(tuple.k()) <= std::pow(std::log(logx), 5.0);
    r.offsets_in_regime = static_cast<double>(tuple.max_offset()) <= logx * logx;
    if (r.discrepancy == 0.0) {
      ++scan.excluded_zero;
    } else {
      lx.push_back(logx);
      ly.push_back(std::log(std::abs(r.discrepancy)));
    }
    scan.records.push_back(r);
  }
  if (lx.size() >= 2) {
    const auto line = least_squares(lx, ly);
    scan.fitted_slope = line.slope;
    scan.residual = line.residual;
  }
  return scan;
}

}  // namespace erdos
