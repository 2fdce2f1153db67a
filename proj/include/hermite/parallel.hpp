#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace hermite {

/// Runs body(begin, end) over [0, count) split into contiguous chunks, one per
/// thread. Bodies must write disjoint outputs; results are then independent
/// of the thread count.
template <typename Body>
void parallel_for(int count, int threads, Body&& body) {
  threads = std::clamp(threads, 1, std::max(1, count));
  if (threads == 1) {
    body(0, count);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  const int chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(count, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}  // namespace hermite
