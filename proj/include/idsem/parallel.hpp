// Deterministic index-space search: the reported witness is always the
// one with the smallest enumeration index, independent of worker count.

#ifndef IDSEM_PARALLEL_HPP_
#define IDSEM_PARALLEL_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace idsem {

// Runs visit(i) for i in [0, n). visit returns true when index i is a
// witness; the smallest witness index is returned, or nullopt when the
// whole space is clean. Workers handle contiguous blocks and stop early
// once a smaller witness is known.
inline std::optional<uint64_t> first_witness(
    uint64_t n, unsigned workers,
    std::function<bool(uint64_t)> const& visit) {
  if (n == 0) {
    return std::nullopt;
  }
  if (workers <= 1 || n < 2 * workers) {
    for (uint64_t i = 0; i < n; ++i) {
      if (visit(i)) {
        return i;
      }
    }
    return std::nullopt;
  }
  std::atomic<uint64_t> best{UINT64_MAX};
  std::vector<std::thread> pool;
  uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t lo = uint64_t(w) * chunk;
    uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) {
      break;
    }
    pool.emplace_back([&, lo, hi] {
      for (uint64_t i = lo; i < hi; ++i) {
        if (i > best.load(std::memory_order_relaxed)) {
          return;  // a witness with a smaller index already exists
        }
        if (visit(i)) {
          uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i,
                                             std::memory_order_relaxed)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  uint64_t b = best.load();
  if (b == UINT64_MAX) {
    return std::nullopt;
  }
  return b;
}

}  // namespace idsem

#endif  // IDSEM_PARALLEL_HPP_
