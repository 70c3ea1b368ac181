#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace crystden::internal {

/// Run fn(begin, end) over [0, count) in contiguous chunks. With one
/// thread this is a plain call; with more, one std::thread per chunk.
/// Chunk boundaries depend only on count and threads, so any per-index
/// output is positionally deterministic.
template <typename Fn>
void parallel_chunks(int threads, size_t count, const Fn& fn) {
  if (threads <= 1 || count < 2048) {
    fn(size_t{0}, count);
    return;
  }
  const size_t n = static_cast<size_t>(threads);
  const size_t step = (count + n - 1) / n;
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (size_t t = 0; t < n; ++t) {
    const size_t begin = t * step;
    const size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace crystden::internal
