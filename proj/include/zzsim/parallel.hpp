#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace zzsim {

// Runs fn(i) for i in [0, count) on up to `threads` workers with static
// chunking. Output ordering is the caller's responsibility (workers write
// to disjoint slots), so results are deterministic regardless of schedule.
inline void parallel_for(int count, int threads,
                         const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace zzsim
