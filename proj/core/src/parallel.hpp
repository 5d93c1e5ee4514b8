// Copyright 2026 The itervote Authors
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

#ifndef ITERVOTE_SRC_PARALLEL_HPP_
#define ITERVOTE_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace itervote::internal {

inline std::size_t plan_chunks(std::size_t count, unsigned threads,
                               std::size_t grain) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t by_grain = std::max<std::size_t>(1, count / std::max<std::size_t>(grain, 1));
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, by_grain));
}

// Calls fn(chunk, begin, end) for `chunks` contiguous slices of [0, count),
// one thread per slice. The first exception (by chunk) is rethrown.
template <class Fn>
void run_chunks(std::size_t count, std::size_t chunks, Fn&& fn) {
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  if (chunks <= 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      try {
        fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace itervote::internal

#endif  // ITERVOTE_SRC_PARALLEL_HPP_
