#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace catgrp::scan {

// All exhaustive checks in this library reduce to one kernel: find the least
// flat index in [0, n) whose predicate holds (the first violation in
// row-major scan order), or npos when the scan is clean. The kernel has a
// serial reference implementation and an OpenMP one; both return the same
// index, so the parallel path never changes which witness a check reports.

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class Mode { automatic, serial, parallel };

// Process-wide execution mode. `automatic` uses the parallel kernel for
// scans large enough to amortize thread startup.
void set_mode(Mode m);
Mode mode();

template <class Pred>
std::size_t find_first_serial(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return npos;
}

// Chunked scan: each thread walks contiguous chunks in increasing order and
// records the first hit per chunk in a shared atomic minimum. A chunk whose
// start index is already past the current minimum cannot improve it and is
// skipped, so early exits never change the result.
template <class Pred>
std::size_t find_first_parallel(std::size_t n, Pred&& pred) {
#ifdef _OPENMP
  constexpr std::size_t chunk = 8192;
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::atomic<std::size_t> best{npos};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * chunk;
    if (begin >= best.load(std::memory_order_relaxed)) continue;
    const std::size_t end = begin + chunk < n ? begin + chunk : n;
    for (std::size_t i = begin; i < end; ++i) {
      if (pred(i)) {
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  }
  return best.load();
#else
  return find_first_serial(n, pred);
#endif
}

template <class Pred>
std::size_t find_first(std::size_t n, Pred&& pred) {
  switch (mode()) {
    case Mode::serial:
      return find_first_serial(n, pred);
    case Mode::parallel:
      return find_first_parallel(n, pred);
    case Mode::automatic:
      break;
  }
  constexpr std::size_t parallel_threshold = 1u << 15;
  if (n < parallel_threshold) return find_first_serial(n, pred);
  return find_first_parallel(n, pred);
}

}  // namespace catgrp::scan
