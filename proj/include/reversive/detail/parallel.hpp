#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reversive::detail {

/// Runs body(i) for i in [0, count) on a small pool of threads. The first
/// exception thrown by any body is rethrown after all workers finish.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    const std::size_t threads = std::min<std::size_t>({hw, 8, std::max<std::size_t>(count, 1)});
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace reversive::detail
