//
// Copyright 2026 The Proofread Forge Authors
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
//

#ifndef PROOFREAD_PARALLEL_H_
#define PROOFREAD_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace proofread {

// Resolves a --jobs value: 0 means one per hardware thread.
inline size_t resolve_jobs(size_t jobs) {
  if (jobs != 0) return jobs;
  return std::max<size_t>(1, std::thread::hardware_concurrency());
}

// Evaluates fn(0..n-1) on up to `jobs` threads and returns the results in
// index order. If any call throws, the exception of the lowest failing index
// is rethrown after all workers finish.
template <class Fn>
auto parallel_map(size_t n, size_t jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, size_t>> {
  using T = std::invoke_result_t<Fn&, size_t>;
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t threads = std::min(resolve_jobs(jobs), n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace proofread

#endif  // PROOFREAD_PARALLEL_H_
