/* Deterministic fork-join helper.  Work items are split into contiguous
 * chunks, each worker folds its chunk in index order, and the per-chunk
 * results are merged in chunk order — so the result is identical for any
 * thread count.  Thread count defaults to the LATFLOW_THREADS environment
 * variable, falling back to hardware concurrency.
 */
#pragma once

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#include "latflow/errors.hpp"

namespace latflow {

inline int default_thread_count() {
    if (const char* env = std::getenv("LATFLOW_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc >= 1 ? static_cast<int>(hc) : 1;
}

/// Fold f(i) over i in [0, n) into per-chunk accumulators of type T (default
/// constructed), then merge chunk accumulators in order with `merge(acc,
/// chunk_acc)`.  `fold(acc, i)` must only touch its own accumulator.
template <class T, class Fold, class Merge>
T parallel_fold(std::size_t n, int threads, Fold fold, Merge merge) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 2) {
        T acc{};
        for (std::size_t i = 0; i < n; ++i) fold(acc, i);
        return acc;
    }
    const std::size_t nthreads = std::min<std::size_t>(threads, n);
    std::vector<T> parts(nthreads);
    std::vector<std::exception_ptr> errs(nthreads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t b = w * chunk, e = std::min(n, b + chunk);
                for (std::size_t i = b; i < e; ++i) fold(parts[w], i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    T acc{};
    for (auto& p : parts) merge(acc, p);
    return acc;
}

} // namespace latflow
