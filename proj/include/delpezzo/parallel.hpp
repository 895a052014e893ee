#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dp {

// Runs body(0..n-1) on up to `threads` workers; the first exception is rethrown.
template <class F>
void parallel_for(size_t n, int threads, F &&body) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads && t < static_cast<int>(n); ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < n;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto &th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace dp
