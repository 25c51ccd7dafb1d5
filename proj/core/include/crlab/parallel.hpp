#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace crlab {

/// Runs f(i) for i in [0, count) across worker threads. Callers store results
/// by index, so output is deterministic regardless of the worker count.
template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; i++) f(i);
    return;
  }
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; t++) {
    workers.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += jobs) f(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace crlab
