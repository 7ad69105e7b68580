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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/summation.hpp"

namespace erdos {

/// Deterministic trial division; intended for small arguments and validation.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// Sorted primes up to `limit`, with 1-indexed access (nth(1) == 2).
class PrimeTable {
 public:
  PrimeTable() = default;

  /// Adopts an externally produced list; checks ordering and bounds only.
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {
    if (limit_ < 2) throw std::domain_error("prime table limit must be >= 2");
    if (primes_.empty() || primes_.front() != 2)
      throw std::invalid_argument("prime table must start at 2");
    if (primes_.back() > limit_)
      throw std::invalid_argument("prime table exceeds its limit");
    if (std::adjacent_find(primes_.begin(), primes_.end(),
                           std::greater_equal<>()) != primes_.end())
      throw std::invalid_argument("prime table must be strictly increasing");
  }

  std::uint64_t limit() const { return limit_; }
  std::size_t size() const { return primes_.size(); }
  std::span<const std::uint64_t> primes() const { return primes_; }

  std::uint64_t nth(std::size_t n) const {
    if (n == 0 || n > primes_.size())
      throw std::out_of_range("prime index " + std::to_string(n) +
                              " outside table of " +
                              std::to_string(primes_.size()));
    return primes_[n - 1];
  }

  /// pi(x) for x <= limit.
  std::size_t count_up_to(std::uint64_t x) const {
    return static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
  }

  bool contains(std::uint64_t x) const {
    return std::binary_search(primes_.begin(), primes_.end(), x);
  }

  /// Copy restricted to primes <= new_limit (new_limit <= limit()).
  PrimeTable truncated(std::uint64_t new_limit) const {
    if (new_limit > limit_)
      throw std::out_of_range("cannot extend a prime table by truncation");
    std::vector<std::uint64_t> kept(primes_.begin(),
                                    primes_.begin() + count_up_to(new_limit));
    return PrimeTable(new_limit, std::move(kept));
  }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

struct SieveOptions {
  /// Bytes of sieve state per segment; each byte covers one odd number.
  std::size_t segment_bytes = std::size_t{1} << 18;
};

/// Segmented odd-only sieve of Eratosthenes.
inline PrimeTable sieve(std::uint64_t limit, SieveOptions options = {}) {
  if (limit < 2) throw std::domain_error("sieve limit must be >= 2");
  if (options.segment_bytes == 0)
    throw std::domain_error("sieve segment size must be positive");

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;

  // Base primes up to sqrt(limit) by a plain sieve.
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    if (i > 2) base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  std::vector<std::uint64_t> primes;
  if (limit > 100) {
    const double estimate = 1.26 * static_cast<double>(limit) /
                            std::log(static_cast<double>(limit));
    primes.reserve(static_cast<std::size_t>(estimate));
  }
  primes.push_back(2);

  // next[i] is the next odd multiple of base[i] still to be crossed off.
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

  const std::uint64_t span_odds = options.segment_bytes;
  std::vector<char> segment(span_odds);
  for (std::uint64_t low = 3; low <= limit; low += 2 * span_odds) {
    const std::uint64_t high = std::min(limit, low + 2 * span_odds - 1);
    const std::uint64_t count = (high - low) / 2 + 1;
    std::fill_n(segment.begin(), count, 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const std::uint64_t q = base[i];
      std::uint64_t m = next[i];
      for (; m <= high; m += 2 * q) segment[(m - low) / 2] = 0;
      next[i] = m;
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      if (segment[k]) primes.push_back(low + 2 * k);
    }
  }
  return PrimeTable(limit, std::move(primes));
}

/// Limit large enough to hold at least n primes (Rosser's bound for n >= 6).
inline std::uint64_t limit_for_prime_count(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

/// Lambda(n): log p when n = p^k, else 0.
inline double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 0;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = n;
  }
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

/// Which step function an accumulator represents. psi counts prime powers,
/// theta counts primes only.
enum class ChebyshevKind { psi, theta };

inline const char* to_string(ChebyshevKind kind) {
  return kind == ChebyshevKind::psi ? "psi" : "theta";
}

/// One atom of a pure-jump measure on the integers.
struct Jump {
  std::uint64_t location;
  double weight;
};

/**
 * The Chebyshev step function as a list of jumps (location p^k, weight log p),
 * plus prefix sums so psi(x) is a binary search.
 *
 * Immutable after construction and safe to share between threads.
 */
class ChebyshevAccumulator {
 public:
  explicit ChebyshevAccumulator(const PrimeTable& table,
                                ChebyshevKind kind = ChebyshevKind::psi)
      : ChebyshevAccumulator(table, table.limit(), kind) {}

  ChebyshevAccumulator(const PrimeTable& table, std::uint64_t limit,
                       ChebyshevKind kind = ChebyshevKind::psi)
      : limit_(limit), kind_(kind) {
    if (limit > table.limit())
      throw capacity_error("accumulator limit " + std::to_string(limit) +
                           " exceeds prime table limit " +
                           std::to_string(table.limit()));
    const auto primes = table.primes();
    const std::size_t count = table.count_up_to(limit);
    jumps_.reserve(count + (kind == ChebyshevKind::psi ? count / 8 + 16 : 0));
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t p = primes[i];
      const double weight = std::log(static_cast<double>(p));
      jumps_.push_back({p, weight});
      if (kind == ChebyshevKind::theta) continue;
      for (std::uint64_t q = p; q <= limit / p;) {
        q *= p;
        jumps_.push_back({q, weight});
      }
    }
    std::sort(jumps_.begin(), jumps_.end(),
              [](const Jump& a, const Jump& b) { return a.location < b.location; });
    prefix_.reserve(jumps_.size());
    CompensatedSum running;
    for (const auto& jump : jumps_) {
      running += jump.weight;
      prefix_.push_back(running.value());
    }
  }

  std::uint64_t limit() const { return limit_; }
  ChebyshevKind kind() const { return kind_; }
  std::span<const Jump> jumps() const { return jumps_; }

  /// Coefficient of the absolutely continuous part (none for psi itself).
  static constexpr double drift() { return 0.0; }

  /// Right-continuous: a jump at exactly x is counted.
  double psi(double x) const {
    check_argument(x);
    return prefix_before(jumps_end_at(x));
  }

  double remainder(double x) const { return psi(x) - x; }

  /// Number of jumps with location <= x.
  std::size_t jumps_end_at(double x) const {
    const double floor_x = std::floor(x);
    if (floor_x < 2.0) return 0;
    const auto bound = static_cast<std::uint64_t>(floor_x);
    return static_cast<std::size_t>(
        std::upper_bound(jumps_.begin(), jumps_.end(), bound,
                         [](std::uint64_t v, const Jump& j) { return v < j.location; }) -
        jumps_.begin());
  }

  /// psi after the first `count` jumps.
  double prefix_before(std::size_t count) const {
    return count == 0 ? 0.0 : prefix_[count - 1];
  }

  /// psi at every point of an ascending grid, in one merge sweep.
  std::vector<double> psi_on_grid(std::span<const double> grid) const {
    std::vector<double> out;
    out.reserve(grid.size());
    std::size_t j = 0;
    double previous = -1.0;
    for (double x : grid) {
      check_argument(x);
      if (x < previous) throw std::invalid_argument("grid must be ascending");
      previous = x;
      while (j < jumps_.size() && static_cast<double>(jumps_[j].location) <= x) ++j;
      out.push_back(prefix_before(j));
    }
    return out;
  }

 private:
  void check_argument(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("psi argument must be >= 0");
    if (x > static_cast<double>(limit_))
      throw std::out_of_range("psi argument " + std::to_string(x) +
                              " beyond accumulator limit " + std::to_string(limit_));
  }

  std::uint64_t limit_ = 0;
  ChebyshevKind kind_ = ChebyshevKind::psi;
  std::vector<Jump> jumps_;
  std::vector<double> prefix_;
};

// Prime-table cache: decimal text, first line the limit, then one prime per
// line in ascending order.

inline void save_prime_cache(const std::filesystem::path& path,
                             const PrimeTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write prime cache " + path.string());
  out << table.limit() << '\n';
  std::string line;
  for (std::uint64_t p : table.primes()) {
    line = std::to_string(p);
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  if (!out) throw std::runtime_error("failed writing prime cache " + path.string());
}

/// Returns the cached table cut to `requested_limit`, or nothing when the file
/// is missing or its header limit is too small.
inline std::optional<PrimeTable> load_prime_cache(const std::filesystem::path& path,
                                                  std::uint64_t requested_limit) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::uint64_t header = 0;
  if (!(in >> header) || header < requested_limit || header < 2) return std::nullopt;
  std::vector<std::uint64_t> primes;
  std::uint64_t p = 0;
  while (in >> p && p <= requested_limit) primes.push_back(p);
  if (primes.empty()) return std::nullopt;
  return PrimeTable(requested_limit, std::move(primes));
}

inline PrimeTable load_or_sieve(const std::optional<std::filesystem::path>& cache,
                                std::uint64_t limit, SieveOptions options = {}) {
  if (cache) {
    if (auto table = load_prime_cache(*cache, limit)) return std::move(*table);
  }
  PrimeTable table = sieve(limit, options);
  if (cache) save_prime_cache(*cache, table);
  return table;
}

}  // namespace erdos
