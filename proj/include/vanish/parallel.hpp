#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace vanish {

// Worker count used by every data-parallel loop in the library. Initialised
// from the VANISH_THREADS environment variable (default 1).
unsigned default_threads();
void set_default_threads(unsigned threads);

// Splits [begin, end) into at most default_threads() contiguous chunks and
// calls fn(worker, lo, hi) for each. Chunk boundaries depend only on the
// range and the worker count, and callers merge per-worker results in worker
// order, so output never depends on scheduling.
template <class Fn>
unsigned parallel_chunks(std::size_t begin, std::size_t end, Fn&& fn) {
  const std::size_t total = end > begin ? end - begin : 0;
  const unsigned workers = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(default_threads(), total)));
  auto bound = [&](unsigned w) { return begin + total * w / workers; };
  if (workers == 1) {
    fn(0u, begin, end);
    return 1;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(w, bound(w), bound(w + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return workers;
}

// Number of workers parallel_chunks will use for a range of the given size.
inline unsigned worker_count(std::size_t total) {
  return static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(default_threads(), total)));
}

}  // namespace vanish
