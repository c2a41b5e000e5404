// Copyright 2026 netcap authors.
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

#ifndef NETCAP_PARALLEL_HPP_
#define NETCAP_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace netcap {

// Monte Carlo work is always partitioned into a fixed chunk count, never
// by worker: chunk boundaries and per-chunk RNG streams depend only on
// (seed, chunk index), and per-chunk results are reduced in chunk order.
// Output is therefore identical for every worker count.
inline constexpr std::size_t kMonteCarloChunks = 64;

inline void parallel_chunks(std::size_t n_chunks, int workers,
                            const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(workers), n_chunks);
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t c = next.fetch_add(1);
        if (c >= n_chunks || failed.load()) return;
        try {
          body(c);
        } catch (...) {
          failed.store(true);
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct ChunkRange {
  std::size_t begin;
  std::size_t end;
};

inline ChunkRange chunk_range(std::size_t total, std::size_t n_chunks,
                              std::size_t chunk) {
  const std::size_t base = total / n_chunks;
  const std::size_t extra = total % n_chunks;
  const std::size_t begin = chunk * base + std::min(chunk, extra);
  const std::size_t size = base + (chunk < extra ? 1 : 0);
  return {begin, begin + size};
}

}  // namespace netcap

#endif  // NETCAP_PARALLEL_HPP_
