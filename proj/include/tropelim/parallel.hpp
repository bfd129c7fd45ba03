#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace tropelim {

inline unsigned effective_threads(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Splits [0, n) into contiguous chunks, one per worker. Each index is handled
// by exactly one worker, so writes into preallocated slots stay race-free and
// the result is independent of the thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    unsigned workers = effective_threads(threads);
    if (workers <= 1 || n < 2048) {
        fn(std::size_t{0}, n);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

} // namespace tropelim
