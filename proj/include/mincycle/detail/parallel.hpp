#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace mincycle::detail {

/// Runs body(lo, hi) over disjoint contiguous chunks of [0, count).
/// threads <= 1 runs inline. Chunk boundaries depend only on (threads, count),
/// so any value-deterministic body yields scheduling-independent results.
inline void run_chunked(int threads, std::size_t count,
                        const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads <= 1 || count < 2) {
    body(0, count);
    return;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& t : pool) t.join();
}

}  // namespace mincycle::detail
