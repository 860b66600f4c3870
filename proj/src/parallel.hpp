#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace netperf::detail {

/// Worker count: NETPERF_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
int thread_count();

/// Runs fn(0..count-1) across worker threads with dynamic scheduling. Work
/// items must write only to their own slots so the schedule cannot leak into
/// results. The first exception thrown by any item is rethrown after join.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& worker : pool) worker.join();

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace netperf::detail
