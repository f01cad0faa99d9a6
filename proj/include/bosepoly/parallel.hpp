#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace bosepoly {

/// Worker count: BOSONIC_POLYTOPE_THREADS when set, else the hardware count.
inline int worker_count() {
  if (const char* env = std::getenv("BOSONIC_POLYTOPE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Index-parallel map: f(i) for i in [0, n). Results must be written by
/// index so the aggregate is deterministic regardless of scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const std::size_t lo = t * chunk;
    if (lo >= n) break;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([lo, hi, &f] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace bosepoly
