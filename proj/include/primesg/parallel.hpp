// parallel.hpp
// Index-based worker pool for the batch sweeps. Work items are pulled from a
// shared counter; callers write results by index, so output order never
// depends on the thread count.

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace primesg {

using ProgressFn = std::function<void(std::int64_t done, std::int64_t total)>;

inline unsigned resolve_jobs(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

template <typename Fn>
void parallel_for_index(std::int64_t count, unsigned jobs, Fn&& fn, const ProgressFn& tick = {}) {
    if (count <= 0) return;
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::int64_t>(resolve_jobs(jobs), count));
    if (nthreads <= 1) {
        for (std::int64_t i = 0; i < count; ++i) {
            fn(i);
            if (tick) tick(i + 1, count);
        }
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> done{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> guard(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
            if (tick) tick(done.fetch_add(1, std::memory_order_relaxed) + 1, count);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace primesg
