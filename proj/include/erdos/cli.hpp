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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdos/asymptotics.hpp"
#include "erdos/error.hpp"
#include "erdos/io.hpp"
#include "erdos/primes.hpp"
#include "erdos/regularity.hpp"
#include "erdos/series.hpp"
#include "erdos/stieltjes.hpp"
#include "erdos/tuples.hpp"

namespace erdos::cli {

/// Invalid flags or parameters; reported with exit status 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Subcommand { sum, gap_series, integral, asymptotic_fit, holder, tuples, report };
enum class OutputFormat { json, csv };

inline constexpr const char* kCacheEnv = "ERDOS_CACHE_DIR";
inline constexpr const char* kCacheFile = "primes.txt";

struct SumParams {
  std::size_t terms = 1'000'000;
  AccelerationMethod method = AccelerationMethod::iterated_average;
  int rounds = 10;
};

struct GapParams {
  double theta = 0.6;
  std::size_t terms = 1'000'000;
  AccelerationMethod method = AccelerationMethod::iterated_average;
  int rounds = 10;
};

struct IntegralParams {
  double lambda = 0.5;
  double X = 1e5;
  Damping damping = Damping::exponential;
  ChebyshevKind kind = ChebyshevKind::psi;
};

struct FitParams {
  double lambda_max = 1.0;
  double lambda_min = 0.05;
  std::size_t points = 8;
  double X = 1e6;
  /// When set, fit a synthetic remainder with this planted exponent instead of psi.
  std::optional<double> planted;
};

struct HolderParams {
  double beta = 0.5;
  double x_min = 100.0;
  double x_max = 1e6;
  double step = 1.0;
  double min_separation = 1.0;
  double h_max = 1 << 16;  // largest profile window
};

struct TupleParams {
  std::string offsets = "0,2";
  std::vector<std::uint64_t> x_grid{10'000, 100'000, 1'000'000};
  SingularSeriesForm form = SingularSeriesForm::standard;
  std::uint64_t cutoff = 1'000'000;
};

struct ReportParams {
  std::set<std::string> skip;
  std::size_t identity_samples = 100;
  std::uint64_t seed = 2026;
  double identity_X_max = 1e5;
};

inline const std::set<std::string>& report_sections() {
  static const std::set<std::string> keys{"series", "integral_identity", "exponent_fit",
                                          "holder_profile", "tuples"};
  return keys;
}

struct RunConfig {
  Subcommand subcommand = Subcommand::report;
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> output_path;
  std::optional<std::filesystem::path> cache_path;
  unsigned threads = 0;  // 0: available parallelism
  bool timestamp = true;

  SumParams sum;
  GapParams gap;
  IntegralParams integral;
  FitParams fit;
  HolderParams holder;
  TupleParams tuples;
  ReportParams report;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw usage_error(message);
}

inline void validate_series(std::size_t terms, AccelerationMethod method, int rounds) {
  require(rounds >= 1, "--rounds must be >= 1");
  const std::size_t applied =
      method == AccelerationMethod::iterated_average ? static_cast<std::size_t>(rounds) : 1;
  require(terms >= std::max<std::size_t>(applied + 3, 16),
          "--terms too small for the requested acceleration");
  require(terms <= 2'000'000'000, "--terms beyond supported range");
}

inline void validate_fit(const FitParams& p) {
  require(p.points >= 6, "--points must be >= 6");
  require(p.lambda_min > 0.0 && p.lambda_max <= 3.0 && p.lambda_min < p.lambda_max,
          "lambda range must satisfy 0 < lambda-min < lambda-max <= 3");
  require(p.X >= 10.0 && p.X <= 4e9, "--X must lie in [10, 4e9]");
  if (p.planted) require(*p.planted > 0.0, "--planted exponent must be positive");
}

inline void validate_holder(const HolderParams& p) {
  require(p.beta > 0.0 && p.beta <= 1.0, "--beta must lie in (0, 1]");
  require(p.min_separation >= 1.0, "--min-separation must be >= 1");
  require(p.step > 0.0, "--step must be positive");
  require(p.x_min >= 0.0 && p.x_max > p.x_min, "need 0 <= x-min < x-max");
  require(p.x_max <= 4e9, "--x-max beyond supported range");
  require(p.h_max >= 1.0, "--h-max must be >= 1");
  require((p.x_max - p.x_min) / p.step >= 1.0, "holder grid needs >= 2 points");
}

inline void validate_tuples(const TupleParams& p) {
  try {
    (void)TupleSpec::parse(p.offsets);
  } catch (const std::domain_error& e) {
    throw usage_error(std::string("--offsets: ") + e.what());
  }
  require(!p.x_grid.empty(), "--x needs at least one value");
  for (std::size_t i = 0; i < p.x_grid.size(); ++i) {
    require(p.x_grid[i] > 2, "--x values must exceed 2");
    require(i == 0 || p.x_grid[i] > p.x_grid[i - 1], "--x values must increase");
  }
  require(p.x_grid.back() <= 4'000'000'000ULL, "--x beyond supported range");
  require(p.cutoff >= 2, "--cutoff must be >= 2");
}

}  // namespace detail

/// Checks every parameter the chosen subcommand will use; throws usage_error.
inline void validate(const RunConfig& c) {
  using detail::require;
  require(c.threads <= 4096, "--threads out of range");
  switch (c.subcommand) {
    case Subcommand::sum:
      detail::validate_series(c.sum.terms, c.sum.method, c.sum.rounds);
      break;
    case Subcommand::gap_series:
      require(c.gap.theta > 0.0 && std::isfinite(c.gap.theta), "--theta must be positive");
      detail::validate_series(c.gap.terms, c.gap.method, c.gap.rounds);
      break;
    case Subcommand::integral:
      require(c.integral.lambda > 0.0 && std::isfinite(c.integral.lambda),
              "--lambda must be positive");
      require(c.integral.X >= 1.0 && c.integral.X <= 4e9, "--X must lie in [1, 4e9]");
      break;
    case Subcommand::asymptotic_fit:
      detail::validate_fit(c.fit);
      break;
    case Subcommand::holder:
      detail::validate_holder(c.holder);
      break;
    case Subcommand::tuples:
      detail::validate_tuples(c.tuples);
      break;
    case Subcommand::report:
      require(c.format == OutputFormat::json, "report is emitted as JSON only");
      for (const auto& key : c.report.skip)
        require(report_sections().count(key) == 1, "unknown report section '" + key + "'");
      require(c.report.identity_samples >= 1, "--identity-samples must be >= 1");
      require(c.report.identity_X_max >= 10.0, "--identity-X-max must be >= 10");
      detail::validate_series(c.sum.terms, c.sum.method, c.sum.rounds);
      detail::validate_fit(c.fit);
      detail::validate_holder(c.holder);
      detail::validate_tuples(c.tuples);
      break;
  }
}

/// Explicit cache file, else $ERDOS_CACHE_DIR/primes.txt, else none.
inline std::optional<std::filesystem::path> resolve_cache_path(const RunConfig& c) {
  if (c.cache_path) return c.cache_path;
  if (const char* dir = std::getenv(kCacheEnv); dir && *dir)
    return std::filesystem::path(dir) / kCacheFile;
  return std::nullopt;
}

namespace detail {

using io::json;

inline unsigned threads_of(const RunConfig& c) {
  return c.threads == 0 ? default_threads() : c.threads;
}

inline PrimeTable primes_to(const RunConfig& c, std::uint64_t limit) {
  return load_or_sieve(resolve_cache_path(c), std::max<std::uint64_t>(limit, 2));
}

inline std::uint64_t ceil_u64(double x) { return static_cast<std::uint64_t>(std::ceil(x)); }

inline SeriesEstimate run_sum(const RunConfig& c) {
  const auto table = primes_to(c, limit_for_prime_count(c.sum.terms));
  return estimate_erdos_series(table, c.sum.terms, c.sum.method, c.sum.rounds,
                               threads_of(c));
}

inline SeriesEstimate run_gap(const RunConfig& c) {
  const auto table = primes_to(c, limit_for_prime_count(c.gap.terms + 1));
  return estimate_gap_series(table, c.gap.theta, c.gap.terms, c.gap.method,
                             c.gap.rounds, threads_of(c));
}

inline IntegralReport run_integral(const RunConfig& c) {
  const auto table = primes_to(c, ceil_u64(c.integral.X));
  const ChebyshevAccumulator acc(table, c.integral.kind);
  return split_main_error(acc, TestFunction(c.integral.lambda, c.integral.damping),
                          c.integral.X);
}

inline std::vector<double> fit_grid(const FitParams& p) {
  return geometric_grid(p.lambda_max, p.lambda_min, p.points);
}

inline ExponentFit run_fit(const RunConfig& c) {
  const auto grid = fit_grid(c.fit);
  if (c.fit.planted) {
    const auto measure = planted_remainder_measure(*c.fit.planted, ceil_u64(c.fit.X));
    return fit_error_exponent(measure, grid, c.fit.X, threads_of(c));
  }
  const auto table = primes_to(c, ceil_u64(c.fit.X));
  const ChebyshevAccumulator acc(table);
  return fit_error_exponent(acc, grid, c.fit.X, threads_of(c));
}

struct HolderRun {
  HolderEstimate estimate;
  ScalingProfile profile;
};

inline HolderRun run_holder(const RunConfig& c) {
  const auto& p = c.holder;
  const auto table = primes_to(c, ceil_u64(p.x_max));
  const ChebyshevAccumulator acc(table);
  HolderRun out;
  out.estimate = holder_constant(acc, p.beta, p.x_min, p.x_max, p.step,
                                 p.min_separation, threads_of(c));
  const auto windows = dyadic_windows(std::min(p.h_max, p.x_max));
  out.profile = scaling_profile(acc, p.x_max, windows, threads_of(c));
  return out;
}

inline DiscrepancyScan run_tuples(const RunConfig& c) {
  const auto tuple = TupleSpec::parse(c.tuples.offsets);
  const auto table = primes_to(c, c.tuples.x_grid.back() + tuple.max_offset());
  return discrepancy_scan(table, tuple, c.tuples.x_grid, c.tuples.form, c.tuples.cutoff,
                          threads_of(c));
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline json run_identity(const RunConfig& c) {
  const auto& p = c.report;
  const auto table = primes_to(c, ceil_u64(p.identity_X_max));
  const ChebyshevAccumulator acc(table);
  std::mt19937_64 rng(p.seed);
  double worst = 0.0;
  json samples = json::array();
  for (std::size_t i = 0; i < p.identity_samples; ++i) {
    const double lambda = 0.1 + 2.9 * unit_uniform(rng);
    const double X = 10.0 + (p.identity_X_max - 10.0) * unit_uniform(rng);
    const TestFunction f(lambda);
    const complex jump_sum = stieltjes_integral(acc, f, X);
    const complex by_parts = integral_by_parts(acc, f, X);
    const double gap = std::abs(jump_sum - by_parts) / (1.0 + std::abs(jump_sum));
    worst = std::max(worst, gap);
  }
  json j;
  j["samples"] = p.identity_samples;
  j["seed"] = p.seed;
  io::put(j, "tolerance", 1e-10);
  io::put(j, "max_scaled_gap", worst);
  j["within_tolerance"] = worst < 1e-10;
  return j;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline json run_report(const RunConfig& c) {
  const auto& skip = c.report.skip;
  json doc;
  if (!skip.count("series")) {
    json s = io::to_json(run_sum(c));
    s["series"] = "sum_{n>=1} (-1)^n n / p_n";
    s["reference_value"] = -0.052161;
    doc["series"] = s;
  }
  if (!skip.count("integral_identity")) doc["integral_identity"] = run_identity(c);
  if (!skip.count("exponent_fit")) {
    json f = io::to_json(run_fit(c), c.fit.X);
    f["integrator"] = c.fit.planted ? "planted" : "psi";
    doc["exponent_fit"] = f;
  }
  if (!skip.count("holder_profile")) {
    const auto h = run_holder(c);
    doc["holder_profile"] = {{"holder", io::to_json(h.estimate)},
                             {"profile", io::to_json(h.profile)}};
  }
  if (!skip.count("tuples")) doc["tuples"] = io::to_json(run_tuples(c));
  if (c.timestamp) doc["generated_at"] = utc_timestamp();
  return doc;
}

inline void emit(const RunConfig& c, std::ostream& out) {
  const bool csv = c.format == OutputFormat::csv;
  switch (c.subcommand) {
    case Subcommand::sum:
    case Subcommand::gap_series: {
      const bool is_sum = c.subcommand == Subcommand::sum;
      const auto est = is_sum ? run_sum(c) : run_gap(c);
      if (csv) {
        io::write_csv(out, est.checkpoints);
      } else {
        json j = io::to_json(est);
        j["command"] = is_sum ? "sum" : "gap-series";
        if (!is_sum) io::put(j, "theta", c.gap.theta);
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Subcommand::integral: {
      const auto report = run_integral(c);
      if (csv) {
        io::write_csv(out, report);
      } else {
        json j = io::to_json(report);
        j["integrator"] = to_string(c.integral.kind);
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Subcommand::asymptotic_fit: {
      const auto fit = run_fit(c);
      if (csv) {
        io::write_csv(out, fit);
      } else {
        json j = io::to_json(fit, c.fit.X);
        j["integrator"] = c.fit.planted ? "planted" : "psi";
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Subcommand::holder: {
      const auto h = run_holder(c);
      if (csv) {
        io::write_csv(out, h.profile);
      } else {
        json j = io::to_json(h.estimate);
        j["profile"] = io::to_json(h.profile);
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Subcommand::tuples: {
      const auto scan = run_tuples(c);
      if (csv) {
        io::write_csv(out, scan);
      } else {
        out << io::to_json(scan).dump(2) << '\n';
      }
      break;
    }
    case Subcommand::report:
      out << run_report(c).dump(2) << '\n';
      break;
  }
}

inline void fail_line(std::ostream& err, const char* kind, const std::string& message) {
  err << "error: kind=" << kind << " message=" << io::json(message).dump() << '\n';
}

}  // namespace detail

/**
 * Validates, computes and writes the report for one subcommand. Returns 0 on
 * success, 2 for usage errors and 1 for failures inside a module; failures
 * print a single "error: kind=<kind> message=<json string>" line to `err`.
 */
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const usage_error& e) {
    detail::fail_line(err, "usage", e.what());
    return 2;
  }
  try {
    if (config.output_path) {
      std::ostringstream buffer;
      detail::emit(config, buffer);
      std::ofstream file(*config.output_path, std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open " + config.output_path->string());
      file << buffer.str();
    } else {
      detail::emit(config, out);
    }
  } catch (const capacity_error& e) {
    detail::fail_line(err, "capacity", e.what());
    return 1;
  } catch (const precision_error& e) {
    detail::fail_line(err, "precision", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    detail::fail_line(err, "domain", e.what());
    return 1;
  } catch (const std::out_of_range& e) {
    detail::fail_line(err, "range", e.what());
    return 1;
  } catch (const std::exception& e) {
    detail::fail_line(err, "runtime", e.what());
    return 1;
  }
  return 0;
}

}  // namespace erdos::cli
