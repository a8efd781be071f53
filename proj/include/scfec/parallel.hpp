#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace scfec {

/// Worker count for embarrassingly parallel loops. Controlled by the
/// SCFEC_THREADS environment variable, defaulting to the hardware count.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SCFEC_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n) on a small thread pool. Work items must be
/// independent; any shared sinks are the caller's problem.
template <typename F>
void parallel_for(std::size_t n, F&& fn) {
    unsigned workers = worker_count();
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

}  // namespace scfec
