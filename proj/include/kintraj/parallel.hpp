#pragma once

// Deterministic work partitioning. Chunk boundaries are fixed by the
// problem size, never by the worker count, and partial results are
// combined in chunk order, so totals are reproducible for any setting of
// the KINTRAJ_WORKERS environment variable.

#include <cstdlib>
#include <functional>
#include <future>
#include <string>
#include <vector>

namespace kintraj {

inline int worker_count() {
    const char* env = std::getenv("KINTRAJ_WORKERS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

// Evaluates fn(0..n_chunks-1) and folds the results in chunk order.
template <typename T, typename Fn, typename Combine>
T map_reduce_chunks(std::size_t n_chunks, T init, Fn&& fn, Combine&& combine) {
    const int workers = worker_count();
    if (workers <= 1 || n_chunks <= 1) {
        T acc = std::move(init);
        for (std::size_t c = 0; c < n_chunks; ++c) acc = combine(std::move(acc), fn(c));
        return acc;
    }
    std::vector<std::future<T>> futures;
    futures.reserve(n_chunks);
    // Bounded fan-out: launch in waves of `workers` tasks.
    std::vector<T> results;
    results.reserve(n_chunks);
    for (std::size_t base = 0; base < n_chunks; base += workers) {
        const std::size_t end = std::min(n_chunks, base + workers);
        futures.clear();
        for (std::size_t c = base; c < end; ++c)
            futures.push_back(std::async(std::launch::async, [&fn, c] { return fn(c); }));
        for (auto& f : futures) results.push_back(f.get());
    }
    T acc = std::move(init);
    for (auto& r : results) acc = combine(std::move(acc), std::move(r));
    return acc;
}

}  // namespace kintraj
