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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "erdos/parallel.hpp"
#include "erdos/summation.hpp"

namespace {

TEST(CompensatedSum, RecoversCancelledSmallTerms) {
  erdos::CompensatedSum acc;
  acc += 1.0;
  for (int i = 0; i < 1000; ++i) acc += 1e-16;
  acc += -1.0;
  double naive = 1.0;
  for (int i = 0; i < 1000; ++i) naive += 1e-16;
  naive -= 1.0;
  EXPECT_EQ(naive, 0.0);
  EXPECT_NEAR(acc.value(), 1e-13, 1e-25);
}

TEST(CompensatedSum, LargeTermAfterSmallSum) {
  // Plain Kahan loses this one; the Neumaier branch keeps it.
  erdos::CompensatedSum acc;
  acc += 1.0;
  acc += 1e100;
  acc += 1.0;
  acc += -1e100;
  EXPECT_EQ(acc.value(), 2.0);
}

TEST(CompensatedSum, MergeMatchesSequential) {
  std::vector<double> terms;
  for (int n = 1; n <= 100'000; ++n) terms.push_back((n % 2 ? -1.0 : 1.0) / n);
  erdos::CompensatedSum whole;
  for (double t : terms) whole += t;
  erdos::CompensatedSum left, right;
  for (std::size_t i = 0; i < terms.size() / 2; ++i) left += terms[i];
  for (std::size_t i = terms.size() / 2; i < terms.size(); ++i) right += terms[i];
  left += right;
  EXPECT_NEAR(left.value(), whole.value(), 1e-16);
}

TEST(CompensatedComplexSum, AddsComponentwise) {
  erdos::CompensatedComplexSum acc;
  acc += {1.0, -2.0};
  acc += {1e-20, 3.0};
  EXPECT_EQ(acc.value(), std::complex<double>(1.0, 1.0));
}

TEST(ForEachBlock, VisitsEveryBlockOnceForAnyThreadCount) {
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    std::vector<int> hits(37, 0);
    erdos::for_each_block(hits.size(), threads, [&](std::size_t b) { hits[b] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(ForEachBlock, PropagatesExceptions) {
  EXPECT_THROW(erdos::for_each_block(10, 4,
                                     [](std::size_t b) {
                                       if (b == 7) throw std::runtime_error("boom");
                                     }),
               std::runtime_error);
}

}  // namespace
