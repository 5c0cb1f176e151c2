#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace risnoma {

/// Worker count to use: `requested` if positive, else the RISNOMA_WORKERS
/// environment variable if it parses as a positive integer, else the
/// hardware concurrency (at least 1).
int resolve_workers(int requested);

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Indices are handed
/// out through a shared counter, so fn must only write to per-index state.
/// The first exception thrown by fn is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  if (n == 0) return;
  const auto w = static_cast<std::size_t>(workers < 1 ? 1 : workers);
  if (w == 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        next.store(n, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t count = w < n ? w : n;
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(body);
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace risnoma
