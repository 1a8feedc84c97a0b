#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace fuzzycorner::detail {

// Splits [begin, end) into contiguous chunks and runs fn(chunk_begin, chunk_end) on
// up to `jobs` threads. fn must only write to rows it owns.
template <typename Fn>
void parallel_rows(int begin, int end, int jobs, Fn&& fn) {
  const int rows = end - begin;
  if (rows <= 0) return;
  jobs = std::clamp(jobs, 1, rows);
  if (jobs == 1) {
    fn(begin, end);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  const int chunk = (rows + jobs - 1) / jobs;
  for (int lo = begin; lo < end; lo += chunk) {
    const int hi = std::min(end, lo + chunk);
    workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
}

}  // namespace fuzzycorner::detail
