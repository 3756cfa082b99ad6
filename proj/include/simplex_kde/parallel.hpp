#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace simplex_kde {

//! Worker count: SIMPLEX_KDE_THREADS when set to a positive integer, else all
//! hardware threads.
std::size_t thread_count();

//! Calls body(i) for every i in [0, n). Work is handed out in chunks; results
//! must be written to per-index slots so output does not depend on the thread
//! count. The first exception thrown by a body is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t chunk = 64) {
  const std::size_t workers = std::min(thread_count(), (n + chunk - 1) / chunk);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (;;) {
        const std::size_t start = next.fetch_add(chunk);
        if (start >= n) return;
        const std::size_t stop = std::min(n, start + chunk);
        for (std::size_t i = start; i < stop; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace simplex_kde
