/*
Copyright 2026 The sigmacong Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "sigmacong/reports.hpp"

namespace sigmacong::detail {

// Walks [lo, hi] in blocks of kProgressBlock. Each block is split into
// contiguous slices, one per worker; `work(a, b)` returns a partial result
// for [a, b] and `merge` folds partials in ascending order of n, so the
// outcome is the same for any thread count. The first worker exception is
// rethrown on the calling thread.
template <class Partial, class Work, class Merge>
void run_blocked(uint64_t lo, uint64_t hi, const RunOptions& options, Work&& work, Merge&& merge) {
  const unsigned threads = std::max(1u, options.threads);
  const uint64_t total = hi - lo + 1;
  uint64_t done = 0;
  uint64_t block_lo = lo;
  while (true) {
    const uint64_t block_hi = (hi - block_lo < kProgressBlock - 1) ? hi : block_lo + kProgressBlock - 1;
    const uint64_t span = block_hi - block_lo + 1;
    if (threads == 1 || span < 2 * threads) {
      merge(work(block_lo, block_hi));
    } else {
      std::vector<Partial> partials(threads);
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      pool.reserve(threads);
      const uint64_t step = span / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const uint64_t a = block_lo + t * step;
        const uint64_t b = (t + 1 == threads) ? block_hi : a + step - 1;
        pool.emplace_back([&, t, a, b] {
          try {
            partials[t] = work(a, b);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      for (auto& p : partials) merge(std::move(p));
    }
    done += span;
    if (options.progress != nullptr) options.progress(done, total, options.progress_user);
    if (block_hi == hi) break;
    block_lo = block_hi + 1;
  }
}

}  // namespace sigmacong::detail
