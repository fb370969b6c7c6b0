#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rooks::detail {

// Runs body(k) for k in [0, count) on up to `workers` threads. Each k is
// handled by exactly one thread, so results stored per k are deterministic.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) body(k);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace rooks::detail
