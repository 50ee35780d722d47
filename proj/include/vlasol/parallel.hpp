#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace vlasol {

/// Worker count: VLASOL_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
int worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunks are
/// independent, so results do not depend on the worker count.
template <class Body>
void parallel_for(int n, Body&& body) {
  const int workers = std::min(worker_count(), std::max(n / 8, 1));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 1; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin < end) threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(0, std::min(n, chunk));
}

}  // namespace vlasol
