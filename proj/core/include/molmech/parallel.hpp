//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_PARALLEL_HPP
#define MOLMECH_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace molmech {

/// Default worker count: MOLMECH_THREADS if set, else 1. Callers that want
/// hardware concurrency pass it explicitly.
inline int default_threads() {
  if (const char* env = std::getenv("MOLMECH_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

/// Static block partition of [0, n). Workers write to disjoint, preallocated
/// slots; any floating-point reduction happens serially in the caller in
/// index order, which keeps results independent of the thread count.
template <class Fn>
void parallel_for(size_t n, int threads, Fn&& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const size_t workers = std::min<size_t>(static_cast<size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace molmech

#endif
