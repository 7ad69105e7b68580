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

// Command-line front end: parses flags into a RunConfig and hands it to
// erdos::cli::run. Parse failures exit with status 2.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "erdos/cli.hpp"

namespace {

using erdos::AccelerationMethod;
using erdos::cli::RunConfig;
using erdos::cli::usage_error;

std::uint64_t to_count(double value, const char* flag) {
  if (!(value >= 0.0) || value != std::floor(value) || value > 1.8e19)
    throw usage_error(std::string(flag) + " must be a non-negative integer");
  return static_cast<std::uint64_t>(value);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

AccelerationMethod method_from(const std::string& name, int rounds) {
  if (name == "none") return AccelerationMethod::none;
  if (name == "pair")
    return rounds == 1 ? AccelerationMethod::pair_average
                       : AccelerationMethod::iterated_average;
  return AccelerationMethod::iterated_average;
}

struct SeriesFlags {
  double terms = 1e6;
  std::string accelerate = "iterated";
  int rounds = 10;
};

void add_series_flags(CLI::App* cmd, SeriesFlags& flags) {
  cmd->add_option("--terms", flags.terms, "Number of series terms N")->capture_default_str();
  cmd->add_option("--accelerate", flags.accelerate, "none | pair | iterated")
      ->check(CLI::IsMember({"none", "pair", "iterated"}))
      ->capture_default_str();
  cmd->add_option("--rounds", flags.rounds, "Pair-averaging rounds")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Alternating Erdos series, Stieltjes integrals against psi, and prime-tuple "
               "discrepancies"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output, cache;
  app.add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_option("--cache", cache,
                 std::string("Prime-table cache file (default: $") +
                     erdos::cli::kCacheEnv + "/" + erdos::cli::kCacheFile + " when set)");
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp, "Omit generated_at from the report");

  SeriesFlags sum_flags, gap_flags;
  auto* sum = app.add_subcommand("sum", "Partial sums of sum (-1)^n n / p_n with acceleration");
  add_series_flags(sum, sum_flags);

  auto* gap = app.add_subcommand("gap-series", "Partial sums of sum (-1)^n / (n^theta gap_n)");
  add_series_flags(gap, gap_flags);
  gap->add_option("--theta", config.gap.theta, "Exponent theta > 0")->capture_default_str();

  std::string damping = "exponential", kind = "psi";
  auto* integral = app.add_subcommand("integral", "Integral of g against psi, split into I1 + I2");
  integral->add_option("--lambda", config.integral.lambda, "Damping rate")->capture_default_str();
  integral->add_option("--X", config.integral.X, "Truncation point")->capture_default_str();
  integral->add_option("--damping", damping, "exponential | power-law")
      ->check(CLI::IsMember({"exponential", "power-law"}))
      ->capture_default_str();
  integral->add_option("--chebyshev", kind, "psi (prime powers) | theta (primes only)")
      ->check(CLI::IsMember({"psi", "theta"}))
      ->capture_default_str();

  auto* fit = app.add_subcommand("asymptotic-fit", "Log-log fit of |I2(lambda)|");
  fit->add_option("--lambda-min", config.fit.lambda_min)->capture_default_str();
  fit->add_option("--lambda-max", config.fit.lambda_max)->capture_default_str();
  fit->add_option("--points", config.fit.points)->capture_default_str();
  fit->add_option("--X", config.fit.X, "Truncation point")->capture_default_str();
  double planted = 0.0;
  fit->add_option("--planted", planted, "Use a synthetic remainder with this exponent");

  auto* holder = app.add_subcommand("holder", "Hoelder constant and scaling profile of psi(x) - x");
  holder->add_option("--beta", config.holder.beta)->capture_default_str();
  holder->add_option("--x-min", config.holder.x_min)->capture_default_str();
  holder->add_option("--x-max", config.holder.x_max)->capture_default_str();
  holder->add_option("--step", config.holder.step)->capture_default_str();
  holder->add_option("--min-separation", config.holder.min_separation)->capture_default_str();
  holder->add_option("--h-max", config.holder.h_max, "Largest profile window")
      ->capture_default_str();

  std::string x_list = "10000,100000,1000000", form = "standard";
  double cutoff = 1e6;
  auto* tuples = app.add_subcommand("tuples", "Prime-tuple counts against the singular series");
  tuples->add_option("--offsets", config.tuples.offsets, "Comma-separated offsets, e.g. 0,2")
      ->capture_default_str();
  tuples->add_option("--x", x_list, "Comma-separated x values")->capture_default_str();
  tuples->add_option("--form", form, "standard | kth-power")
      ->check(CLI::IsMember({"standard", "kth-power"}))
      ->capture_default_str();
  tuples->add_option("--cutoff", cutoff, "Euler product cutoff")->capture_default_str();

  std::string skip;
  double report_terms = 1e6;
  auto* report = app.add_subcommand("report", "Run every experiment and emit one JSON document");
  report->add_option("--skip", skip, "Comma-separated sections to omit");
  report->add_option("--terms", report_terms, "Series terms")->capture_default_str();
  report->add_option("--identity-samples", config.report.identity_samples)->capture_default_str();
  report->add_option("--seed", config.report.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: kind=usage message="
              << erdos::io::json(std::string(e.what())).dump() << '\n';
    return 2;
  }

  try {
    config.format = format == "csv" ? erdos::cli::OutputFormat::csv
                                    : erdos::cli::OutputFormat::json;
    if (!output.empty()) config.output_path = output;
    if (!cache.empty()) config.cache_path = cache;
    config.timestamp = !no_timestamp;

    const auto series_params = [](const SeriesFlags& f, std::size_t& terms,
                                  AccelerationMethod& method, int& rounds) {
      terms = to_count(f.terms, "--terms");
      method = method_from(f.accelerate, f.rounds);
      rounds = f.rounds;
    };

    if (*sum) {
      config.subcommand = erdos::cli::Subcommand::sum;
      series_params(sum_flags, config.sum.terms, config.sum.method, config.sum.rounds);
    } else if (*gap) {
      config.subcommand = erdos::cli::Subcommand::gap_series;
      series_params(gap_flags, config.gap.terms, config.gap.method, config.gap.rounds);
    } else if (*integral) {
      config.subcommand = erdos::cli::Subcommand::integral;
      config.integral.damping = damping == "power-law" ? erdos::Damping::power_law
                                                       : erdos::Damping::exponential;
      config.integral.kind =
          kind == "theta" ? erdos::ChebyshevKind::theta : erdos::ChebyshevKind::psi;
    } else if (*fit) {
      config.subcommand = erdos::cli::Subcommand::asymptotic_fit;
      if (fit->count("--planted")) config.fit.planted = planted;
    } else if (*holder) {
      config.subcommand = erdos::cli::Subcommand::holder;
    } else if (*tuples || *report) {
      config.subcommand =
          *tuples ? erdos::cli::Subcommand::tuples : erdos::cli::Subcommand::report;
      config.tuples.x_grid.clear();
      for (const auto& item : split_commas(x_list))
        config.tuples.x_grid.push_back(to_count(std::stod(item), "--x"));
      config.tuples.form = form == "kth-power" ? erdos::SingularSeriesForm::kth_power
                                           : erdos::SingularSeriesForm::standard;
      config.tuples.cutoff = to_count(cutoff, "--cutoff");
      if (*report) {
        for (const auto& item : split_commas(skip)) config.report.skip.insert(item);
        config.sum.terms = to_count(report_terms, "--terms");
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: kind=usage message=" << erdos::io::json(std::string(e.what())).dump()
              << '\n';
    return 2;
  }

  return erdos::cli::run(config, std::cout, std::cerr);
}
