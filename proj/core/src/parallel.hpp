// Internal: fixed-size job list over a worker pool. Results are written by
// index so output order never depends on scheduling; the first worker
// exception is rethrown after all threads join.
#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tcr {

inline void run_indexed_jobs(std::size_t count, int parallelism,
                             const std::function<void(std::size_t)>& work) {
    if (parallelism <= 1 || count <= 1) {
        for (std::size_t job = 0; job < count; ++job) work(job);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(static_cast<std::size_t>(parallelism), count));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            try {
                for (std::size_t job = next.fetch_add(1); job < count; job = next.fetch_add(1)) {
                    work(job);
                }
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);  // drain remaining jobs
            }
        });
    }
    for (auto& thread : threads) thread.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace tcr
