#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rf {

// RAMSEY_FORGE_THREADS, else hardware concurrency
inline int thread_count() {
    if (const char* env = std::getenv("RAMSEY_FORGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Deterministic block map: the index space [0, total) is cut into fixed
// blocks independent of the thread count; each block produces one value
// and the caller reduces them in block order. Output is identical for
// any number of workers.
template <typename Result, typename BlockFn>
std::vector<Result> map_blocks(uint64_t total, uint64_t block_size, BlockFn&& fn) {
    uint64_t blocks = block_size ? (total + block_size - 1) / block_size : 0;
    std::vector<Result> results(static_cast<size_t>(blocks));
    if (blocks == 0) return results;
    int workers = std::min<uint64_t>(uint64_t(thread_count()), blocks);
    std::atomic<uint64_t> next{0};
    auto run = [&] {
        for (uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
            uint64_t lo = b * block_size;
            uint64_t hi = std::min(total, lo + block_size);
            results[size_t(b)] = fn(lo, hi);
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace rf
