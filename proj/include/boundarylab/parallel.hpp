#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace bdlab {

/// Worker count: explicit request > BOUNDARY_LAB_THREADS > hardware.
/// Affects speed only; all parallel reductions in this project are
/// order-insensitive or reduced in fixed chunk order.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BOUNDARY_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(chunk) for chunk = 0..n_chunks-1. The chunk decomposition is
/// caller-defined and independent of the worker count.
template <typename Fn>
void parallel_chunks(int n_chunks, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n_chunks <= 1) {
        for (int c = 0; c < n_chunks; ++c) fn(c);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n_chunks);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) fn(c);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace bdlab
