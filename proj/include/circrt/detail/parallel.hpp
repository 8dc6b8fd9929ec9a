#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace circrt::detail {

/// Evaluates `probe(i)` for i in [0, count) and returns the hit with the
/// smallest index, so the answer never depends on `workers`.
///
/// Indices are handed out in blocks; a worker stops once every remaining
/// block lies past the best hit found so far.
template <class T, class Probe>
std::optional<T> first_hit(std::size_t count, unsigned workers, Probe probe)
{
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto hit = probe(i))
        return hit;
    return std::nullopt;
  }

  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  const std::size_t block = std::max<std::size_t>(1, count / (static_cast<std::size_t>(workers) * 8));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_index{std::numeric_limits<std::size_t>::max()};
  std::optional<T> best;
  std::mutex guard;

  auto run = [&] {
    while (true) {
      const std::size_t lo = next.fetch_add(block);
      if (lo >= count || lo > best_index.load())
        return;
      const std::size_t hi = std::min(count, lo + block);
      for (std::size_t i = lo; i < hi; ++i) {
        if (i > best_index.load())
          break;
        if (auto hit = probe(i)) {
          std::lock_guard lock(guard);
          if (i < best_index.load()) {
            best_index.store(i);
            best = std::move(hit);
          }
          break;
        }
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(run);
  pool.clear();
  return best;
}

} // namespace circrt::detail
