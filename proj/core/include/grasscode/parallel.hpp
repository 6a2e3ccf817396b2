#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace grasscode {

/// Runs fn(worker, i) for i in [0, count); worker w takes i = w, w+jobs, ...
/// Callers merge per-worker results by index, so output does not depend on jobs.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += jobs) fn(w, i);
    });
}

}  // namespace grasscode
