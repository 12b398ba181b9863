#pragma once

#include <algorithm>
#include <barrier>
#include <cstddef>
#include <thread>
#include <vector>

namespace dsd::parallel {

inline std::size_t default_workers() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

struct Chunk {
  std::size_t begin;
  std::size_t end;
};

// Contiguous block `index` of `parts` covering [0, total).
inline Chunk chunk(std::size_t total, std::size_t parts, std::size_t index) {
  const std::size_t base = total / parts;
  const std::size_t extra = total % parts;
  const std::size_t begin = index * base + std::min(index, extra);
  return {begin, begin + base + (index < extra ? 1 : 0)};
}

/// Runs body(worker_id, barrier) on `workers` threads and joins them. Worker
/// 0 runs on the calling thread. The body must not throw.
template <class Body>
void run_team(std::size_t workers, Body&& body) {
  workers = std::max<std::size_t>(1, workers);
  std::barrier<> sync(static_cast<std::ptrdiff_t>(workers));
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t id = 1; id < workers; ++id) {
      threads.emplace_back([&body, &sync, id] { body(id, sync); });
    }
    body(std::size_t{0}, sync);
  }
}

}  // namespace dsd::parallel
