#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace orbirad {

// Thread cap: ORBIRAD_THREADS if set, otherwise all cores.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("ORBIRAD_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Static partition; results must be written by index so the output is
// independent of the thread count.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    unsigned threads = thread_cap();
    if (threads > n) threads = static_cast<unsigned>(n ? n : 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::size_t lo = n * t / threads, hi = n * (t + 1) / threads;
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                bool expect = false;
                if (failed.compare_exchange_strong(expect, true))
                    err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace orbirad
