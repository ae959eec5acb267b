#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace senti {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over contiguous chunks of [0, n). Each index is visited
// by exactly one chunk; fn must only write state owned by its own indices, so
// the result is identical for any thread count.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  threads = resolve_threads(threads);
  if (n == 0) return;
  const std::size_t n_chunks =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (n_chunks <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_chunks);
  const std::size_t step = (n + n_chunks - 1) / n_chunks;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) break;
    workers.emplace_back(fn, begin, end);
  }
  for (auto& w : workers) w.join();
}

// Runs fn(shard) for shards 0..n_shards-1. Shard boundaries are fixed by the
// caller, never by the thread count, so any order-sensitive reduction over
// shard outputs stays bit-identical.
inline void parallel_shards(std::size_t n_shards, int threads,
                            const std::function<void(std::size_t)>& fn) {
  parallel_chunks(n_shards, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) fn(s);
  });
}

}  // namespace senti
