// Copyright 2026 The gbm Authors.
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

#ifndef GBM_PARALLEL_H_
#define GBM_PARALLEL_H_

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace gbm {

inline constexpr char kThreadsEnv[] = "GBM_THREADS";

// Worker count from GBM_THREADS, else the hardware concurrency.
inline int ThreadCount() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Evaluates fn(i) for i in [0, count) into slot i. Output order does not
// depend on the thread count. Exceptions are rethrown after joining.
template <typename R, typename Fn>
std::vector<R> ParallelMap(size_t count, Fn fn) {
  std::vector<R> out(count);
  const int workers =
      static_cast<int>(std::min<size_t>(ThreadCount(), count == 0 ? 1 : count));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto body = [&] {
    for (size_t i = next++; i < count && !failed; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace gbm

#endif  // GBM_PARALLEL_H_
