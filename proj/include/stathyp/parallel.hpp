#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace stathyp {

inline int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(chunk_index, begin, end) over [0, total) split into contiguous
// chunks. Results must be combined by chunk index (or be order-independent,
// like integer sums) so the outcome does not depend on the thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  std::uint64_t nchunks = static_cast<std::uint64_t>(threads);
  if (nchunks > total) nchunks = total == 0 ? 1 : total;
  if (nchunks <= 1) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  std::uint64_t base = total / nchunks, rem = total % nchunks, begin = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    std::uint64_t len = base + (c < rem ? 1 : 0);
    std::uint64_t end = begin + len;
    pool.emplace_back([&fn, c, begin, end] { fn(static_cast<std::size_t>(c), begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace stathyp
