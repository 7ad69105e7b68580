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

#include "erdos/asymptotics.hpp"
#include "erdos/error.hpp"
#include "erdos/primes.hpp"
#include "erdos/regularity.hpp"
#include "erdos/series.hpp"
#include "erdos/special.hpp"
#include "erdos/stieltjes.hpp"
#include "erdos/summation.hpp"
#include "erdos/tuples.hpp"
