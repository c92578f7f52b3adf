// Copyright 2026 The SkillKit Authors.
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

#ifndef SKILLKIT_PARALLEL_H_
#define SKILLKIT_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace skillkit {

// Calls fn(i) for every i in [0, n), splitting the range into contiguous
// chunks over up to `parallelism` threads. Each index is handled exactly
// once; callers write results into slot i so output order never depends on
// scheduling. If any call throws, the exception from the lowest failing
// chunk is rethrown after all threads finish.
template <typename Fn>
void ParallelFor(std::size_t n, std::size_t parallelism, Fn &&fn) {
  const std::size_t workers = std::clamp<std::size_t>(parallelism, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace skillkit

#endif  // SKILLKIT_PARALLEL_H_
