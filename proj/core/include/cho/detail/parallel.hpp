#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cho::detail {

// Runs fn(i) for i in [0, count) on a small worker pool. Results land in
// index order, so assembly is deterministic regardless of scheduling.
// The first exception wins and is rethrown after all workers join.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (jobs > count) jobs = static_cast<unsigned>(count);

  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);  // drain remaining work
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<R> out(count);
  parallel_for_index(count, jobs, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace cho::detail
