#pragma once

#include <functional>
#include <vector>

namespace haarint {

// Global worker cap, set from the CLI --threads flag. 0 = hardware default.
void set_max_threads(int n);
int max_threads();

// Runs fn(block_index, begin, end) over [0, count) split into blocks, then
// merges results in block-index order so the reduction is deterministic
// regardless of thread count.
void parallel_blocks(std::size_t count,
                     const std::function<void(std::size_t block, std::size_t begin, std::size_t end)>& fn,
                     std::size_t min_block = 1);

std::size_t parallel_block_count(std::size_t count, std::size_t min_block = 1);

}  // namespace haarint
