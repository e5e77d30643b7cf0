#include "haarint/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace haarint {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  int n = g_max_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::size_t parallel_block_count(std::size_t count, std::size_t min_block) {
  if (count == 0) return 0;
  std::size_t workers = static_cast<std::size_t>(max_threads());
  std::size_t blocks = std::min<std::size_t>(workers * 4, count / std::max<std::size_t>(min_block, 1));
  return std::max<std::size_t>(blocks, 1);
}

void parallel_blocks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     std::size_t min_block) {
  if (count == 0) return;
  std::size_t blocks = parallel_block_count(count, min_block);
  std::size_t per = (count + blocks - 1) / blocks;
  if (blocks == 1 || max_threads() == 1) {
    for (std::size_t b = 0; b < blocks; ++b)
      fn(b, b * per, std::min(count, (b + 1) * per));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      fn(b, b * per, std::min(count, (b + 1) * per));
    }
  };
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(max_threads()), blocks);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace haarint
