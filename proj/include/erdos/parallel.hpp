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
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace erdos {

/// Worker count used when callers pass 0.
inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Runs `body(block)` for every block index in [0, block_count) on up to
 * `threads` workers. Blocks are claimed in a fixed round-robin pattern and the
 * caller stores per-block results by index, so any reduction done afterwards
 * in block order is independent of the worker count.
 *
 * The first exception thrown by any block is rethrown on the calling thread.
 */
template <typename Body>
void for_each_block(std::size_t block_count, unsigned threads, Body&& body) {
  if (threads == 0) threads = default_threads();
  const auto workers = static_cast<std::size_t>(
      std::min<std::size_t>(threads, std::max<std::size_t>(block_count, 1)));
  if (workers <= 1) {
    for (std::size_t b = 0; b < block_count; ++b) body(b);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t b = w; b < block_count; b += workers) body(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace erdos
