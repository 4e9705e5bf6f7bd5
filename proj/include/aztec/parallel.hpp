// Deterministic parallel batches: work items are indexed, results land in
// pre-assigned slots, and per-item RNG streams make output independent of the
// thread count.  AZTEC_THREADS caps the pool.
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace aztec {

inline int thread_budget() {
  if (const char* env = std::getenv("AZTEC_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) across the thread budget.
inline void parallel_for(long count, const std::function<void(long)>& fn) {
  int threads = std::min<long>(thread_budget(), count);
  if (threads <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        long i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace aztec
