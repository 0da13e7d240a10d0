#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schubert {

/// Worker count to use for a requested value; 0 means one per hardware
/// thread.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Splits [0, count) into at most `jobs` contiguous ranges and calls
/// body(begin, end, chunk) for each, one thread per range. chunk numbers the
/// ranges in index order. The first exception thrown by any worker is
/// rethrown after all workers have joined.
template <class Body>
void parallel_ranges(std::uint64_t count, int jobs, Body&& body) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(workers, count));
  const std::uint64_t step = (count + chunks - 1) / std::max<std::uint64_t>(1, chunks);
  if (chunks == 1) {
    body(std::uint64_t{0}, count, std::size_t{0});
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_lock;
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = std::min(count, c * step);
      const std::uint64_t end = std::min(count, begin + step);
      threads.emplace_back([&, begin, end, c] {
        try {
          body(begin, end, static_cast<std::size_t>(c));
        } catch (...) {
          std::lock_guard guard(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace schubert
