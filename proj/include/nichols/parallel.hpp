#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nichols {

/// Worker count: NICHOLS_WORKERS when set, hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* env = std::getenv("NICHOLS_WORKERS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Index-parallel loop with deterministic slot-indexed results; the caller
/// merges in index order. The first worker exception is rethrown here.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    unsigned spawn = static_cast<unsigned>(std::min<size_t>(workers, count));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace nichols
