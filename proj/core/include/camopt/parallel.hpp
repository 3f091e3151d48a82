#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace camopt {

/// Worker count: CAMOPT_THREADS if set and positive, else the hardware
/// concurrency.
inline unsigned worker_count()
{
    if (const char* env = std::getenv("CAMOPT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {
inline thread_local bool in_parallel_region = false;
}  // namespace detail

/// Calls body(i) for i in [0, n). Each index is visited exactly once; the
/// caller writes results by index, so the outcome does not depend on
/// scheduling. The first exception thrown by any call is rethrown. Nested
/// calls from inside a worker run serially.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, unsigned threads = 0)
{
    if (threads == 0)
        threads = worker_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (detail::in_parallel_region)
        threads = 1;
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        detail::in_parallel_region = true;
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace camopt
