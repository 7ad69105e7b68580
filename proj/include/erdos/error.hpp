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

#include <stdexcept>
#include <string>

namespace erdos {

// Domain and index errors use std::domain_error / std::out_of_range directly.
// The two kinds below have no standard counterpart.

/// Not enough primes (or jump points) available for the requested work.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical signal is swamped by truncation or rounding.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace erdos
