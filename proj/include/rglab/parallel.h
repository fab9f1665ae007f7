// Copyright 2026 The rglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RGLAB_PARALLEL_H_
#define RGLAB_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace rglab {

// Thread count from RGLAB_THREADS, else the hardware concurrency (>= 1).
std::size_t default_thread_count();

// Evaluates produce(i) for i in [begin, end) on `threads` workers and hands
// the results to consume(i, value) strictly in index order, from the calling
// thread. Work proceeds in chunks so memory stays bounded on long runs. If
// produce throws, the exception of the lowest failing index is rethrown after
// all earlier results have been consumed.
template <class T, class Produce, class Consume>
void ordered_parallel(std::size_t begin, std::size_t end, std::size_t threads,
                      Produce&& produce, Consume&& consume) {
  threads = std::max<std::size_t>(threads, 1);
  const std::size_t chunk = std::max<std::size_t>(16, threads * 4);
  std::vector<std::optional<T>> slots;
  std::vector<std::exception_ptr> errors;
  for (std::size_t lo = begin; lo < end; lo += chunk) {
    const std::size_t hi = std::min(end, lo + chunk);
    slots.assign(hi - lo, std::nullopt);
    errors.assign(hi - lo, nullptr);
    std::atomic<std::size_t> next{lo};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < hi;) {
        try {
          slots[i - lo].emplace(produce(i));
        } catch (...) {
          errors[i - lo] = std::current_exception();
        }
      }
    };
    const std::size_t workers = std::min(threads, hi - lo);
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    for (std::size_t i = lo; i < hi; ++i) {
      if (errors[i - lo]) std::rethrow_exception(errors[i - lo]);
      consume(i, std::move(*slots[i - lo]));
    }
  }
}

}  // namespace rglab

#endif  // RGLAB_PARALLEL_H_
