#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace toto {

/// Worker count: TOTO_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("TOTO_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count), splitting the range into contiguous
/// blocks. The first exception thrown by any block is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, std::size_t min_per_thread = 1) {
  const std::size_t threads = std::min(worker_count(), std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_per_thread)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t block = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t end = std::min(count, (t + 1) * block);
        for (std::size_t i = t * block; i < end; ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace toto
