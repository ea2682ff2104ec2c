#pragma once

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hardylab {

// Worker cap. HARDY_LAB_THREADS overrides (0 or unset = all hardware threads).
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HARDY_LAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

// Runs fn(i) for i in [0, n) split into contiguous blocks across threads.
// Each index is visited exactly once; callers write results into
// per-index slots so the outcome is independent of the thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned b = 0; b < workers; ++b) {
        std::size_t lo = n * b / workers;
        std::size_t hi = n * (b + 1) / workers;
        pool.emplace_back([&, b, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace hardylab
