#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ddouble::detail {

// Chunked parallel loop over [0, n). Work items must be independent and
// write disjoint output slots, which keeps results schedule-independent.
// The first exception thrown by a worker is rethrown on the caller.
inline void parallel_for(long n, const std::function<void(long, long)>& chunk) {
    if (n <= 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    long workers = std::max(1L, std::min<long>(hw ? hw : 1, n));
    if (workers == 1) {
        chunk(0, n);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> threads;
    long per = (n + workers - 1) / workers;
    for (long w = 0; w < workers; ++w) {
        long lo = w * per, hi = std::min(n, lo + per);
        if (lo >= hi) break;
        threads.emplace_back([=, &chunk, &error, &error_mu] {
            try {
                chunk(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ddouble::detail
