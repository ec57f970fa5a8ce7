#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace vsqc {

inline int hardware_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

/// Runs fn(i) for every i in [0, n) across `jobs` threads (0 = hardware
/// default). Work is handed out by an atomic counter; callers store results
/// indexed by i, so reductions stay deterministic regardless of schedule.
inline void parallel_for_index(std::int64_t n, int jobs, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    if (jobs <= 0) jobs = hardware_jobs();
    jobs = static_cast<int>(std::min<std::int64_t>(jobs, n));
    if (jobs == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::int64_t i = next.fetch_add(1);
                if (i >= n || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace vsqc
