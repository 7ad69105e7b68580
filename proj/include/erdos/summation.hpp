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

namespace erdos {

/**
 * Compensated accumulator (Kahan-Babuska / Neumaier variant).
 *
 * Unlike plain Kahan summation the correction stays valid when the incoming
 * term is larger in magnitude than the running sum, which happens constantly
 * in alternating series.
 */
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) {
    add(value);
    return *this;
  }

  /// Folds another accumulator in; used to merge per-block partial sums.
  CompensatedSum& operator+=(const CompensatedSum& other) {
    add(other.sum_);
    compensation_ += other.compensation_;
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> value) {
    re_.add(value.real());
    im_.add(value.imag());
  }

  CompensatedComplexSum& operator+=(std::complex<double> value) {
    add(value);
    return *this;
  }

  CompensatedComplexSum& operator+=(const CompensatedComplexSum& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace erdos
