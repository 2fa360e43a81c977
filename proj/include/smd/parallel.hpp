#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace smd {

inline unsigned thread_count() {
    if (const char* env = std::getenv("SMD_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, count) across threads.  If any call throws, the
/// exception from the lowest failing index is rethrown after all workers
/// finish, so failures are deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::mutex mtx;
    std::size_t failed_index = count;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mtx);
                    if (i < failed_index) {
                        failed_index = i;
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace smd
