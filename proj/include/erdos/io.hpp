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
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "erdos/asymptotics.hpp"
#include "erdos/regularity.hpp"
#include "erdos/series.hpp"
#include "erdos/stieltjes.hpp"
#include "erdos/tuples.hpp"

// JSON numbers carry the shortest round-trip representation. Every object also
// gets a "decimal" member repeating its floating-point fields as 17-digit
// strings, for readers whose JSON parser rounds.

namespace erdos::io {

using nlohmann::json;

inline std::string decimal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void put(json& obj, const std::string& key, double v) {
  obj[key] = v;
  obj["decimal"][key] = decimal(v);
}

inline void put(json& obj, const std::string& key, std::complex<double> v) {
  obj[key] = json::array({v.real(), v.imag()});
  obj["decimal"][key] = json::array({decimal(v.real()), decimal(v.imag())});
}

inline json to_json(const Checkpoint& c) {
  json j;
  j["N"] = c.terms;
  put(j, "raw_partial_sum", c.raw_partial_sum);
  put(j, "accelerated_value", c.accelerated_value);
  put(j, "step_uncertainty", c.step_uncertainty);
  put(j, "uncertainty", c.uncertainty);
  return j;
}

inline json to_json(const SeriesEstimate& e) {
  json j;
  j["terms_used"] = e.result.terms_used;
  j["method"] = to_string(e.result.method);
  j["rounds"] = e.result.rounds;
  put(j, "raw_partial_sum", e.result.raw_partial_sum);
  put(j, "accelerated_value", e.result.accelerated_value);
  put(j, "estimated_uncertainty", e.result.estimated_uncertainty);
  put(j, "opposite_parity_value", e.opposite_parity_value);
  j["checkpoints"] = json::array();
  for (const auto& c : e.checkpoints) j["checkpoints"].push_back(to_json(c));
  return j;
}

inline json to_json(const IntegralReport& r) {
  json j;
  put(j, "lambda", r.lambda);
  j["damping"] = to_string(r.damping);
  put(j, "X", r.truncation_X);
  put(j, "total", r.total);
  put(j, "main", r.main_term);
  put(j, "error", r.error_term);
  put(j, "truncation_bound", r.truncation_bound);
  return j;
}

inline json to_json(const ExponentFit& fit, double X) {
  json j;
  put(j, "slope", fit.fitted_slope);
  put(j, "residual", fit.residual);
  put(j, "X", X);
  j["grid"] = fit.lambda_grid;
  j["magnitudes"] = fit.magnitudes;
  json grid_text = json::array(), mag_text = json::array();
  for (double v : fit.lambda_grid) grid_text.push_back(decimal(v));
  for (double v : fit.magnitudes) mag_text.push_back(decimal(v));
  j["decimal"]["grid"] = grid_text;
  j["decimal"]["magnitudes"] = mag_text;
  return j;
}

inline json to_json(const HolderEstimate& h) {
  json j;
  put(j, "beta", h.beta);
  put(j, "constant", h.best_constant);
  put(j, "min_separation", h.min_separation);
  j["argmax_pair"] = json::array({h.argmax_pair.first, h.argmax_pair.second});
  j["sample_count"] = h.sample_count;
  j["pair_count"] = h.pair_count;
  j["function"] = "R(x) = psi(x) - x";
  return j;
}

inline json to_json(const ScalingProfile& p) {
  json j;
  j["rows"] = json::array();
  for (const auto& row : p.rows) {
    json r;
    put(r, "h", row.h);
    put(r, "max_increment", row.max_increment);
    put(r, "at_x", row.at_x);
    j["rows"].push_back(r);
  }
  put(j, "slope", p.slope);
  put(j, "residual", p.residual);
  return j;
}

inline json to_json(const DiscrepancyRecord& r) {
  json j;
  j["x"] = r.x;
  j["lhs_count"] = r.lhs_count;
  put(j, "singular_series", r.singular_series);
  put(j, "integral_term", r.integral_term);
  put(j, "discrepancy", r.discrepancy);
  j["k_in_regime"] = r.k_in_regime;
  j["offsets_in_regime"] = r.offsets_in_regime;
  return j;
}

inline json to_json(const DiscrepancyScan& s) {
  json j;
  j["offsets"] = s.tuple.to_string();
  j["admissible"] = s.tuple.admissible();
  j["form"] = to_string(s.form);
  j["cutoff"] = s.cutoff;
  j["records"] = json::array();
  for (const auto& r : s.records) j["records"].push_back(to_json(r));
  if (s.fitted_slope) {
    put(j, "slope", *s.fitted_slope);
  } else {
    j["slope"] = nullptr;
  }
  put(j, "residual", s.residual);
  j["excluded_zero"] = s.excluded_zero;
  return j;
}

// CSV writers: header row, then 17-significant-digit numbers.

inline void write_csv(std::ostream& out, const std::vector<Checkpoint>& rows) {
  out << "N,raw_partial_sum,accelerated_value,uncertainty\n";
  for (const auto& c : rows)
    out << c.terms << ',' << decimal(c.raw_partial_sum) << ','
        << decimal(c.accelerated_value) << ',' << decimal(c.uncertainty) << '\n';
}

inline void write_csv(std::ostream& out, const IntegralReport& r) {
  out << "lambda,damping,X,re_total,im_total,re_main,im_main,re_error,im_error,"
         "truncation_bound\n";
  out << decimal(r.lambda) << ',' << to_string(r.damping) << ','
      << decimal(r.truncation_X) << ',' << decimal(r.total.real()) << ','
      << decimal(r.total.imag()) << ',' << decimal(r.main_term.real()) << ','
      << decimal(r.main_term.imag()) << ',' << decimal(r.error_term.real()) << ','
      << decimal(r.error_term.imag()) << ',' << decimal(r.truncation_bound) << '\n';
}

inline void write_csv(std::ostream& out, const ExponentFit& fit) {
  out << "lambda,abs_I,abs_I1,abs_I2,re_I,im_I,re_I1,im_I1,re_I2,im_I2\n";
  for (const auto& row : fit.rows)
    out << decimal(row.lambda) << ',' << decimal(std::abs(row.total)) << ','
        << decimal(std::abs(row.main_term)) << ',' << decimal(std::abs(row.error_term))
        << ',' << decimal(row.total.real()) << ',' << decimal(row.total.imag()) << ','
        << decimal(row.main_term.real()) << ',' << decimal(row.main_term.imag()) << ','
        << decimal(row.error_term.real()) << ',' << decimal(row.error_term.imag())
        << '\n';
}

inline void write_csv(std::ostream& out, const ScalingProfile& p) {
  out << "h,max_increment\n";
  for (const auto& row : p.rows)
    out << decimal(row.h) << ',' << decimal(row.max_increment) << '\n';
}

inline void write_csv(std::ostream& out, const DiscrepancyScan& s) {
  out << "x,lhs_count,singular_series,integral_term,discrepancy\n";
  for (const auto& r : s.records)
    out << r.x << ',' << r.lhs_count << ',' << decimal(r.singular_series) << ','
        << decimal(r.integral_term) << ',' << decimal(r.discrepancy) << '\n';
}

}  // namespace erdos::io
