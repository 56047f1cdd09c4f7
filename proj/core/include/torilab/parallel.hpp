/**
 * @file parallel.hpp
 * @brief Deterministic chunked parallel loop. TORILAB_THREADS caps the
 *        worker count; results must be written to per-index slots.
 */
#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace torilab {

inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("TORILAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = std::min<long>(n, v);
    }
    return n;
}

/// Runs f(i) for i in [0, count); f must only touch state indexed by i.
template <class F>
void parallel_for(size_t count, F&& f) {
    int threads = thread_budget();
    if (threads <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    threads = static_cast<int>(std::min<size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = static_cast<size_t>(t); i < count; i += static_cast<size_t>(threads)) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace torilab
