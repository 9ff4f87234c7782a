#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hashnet::detail {

/// Runs fn(i) for every i in [0, count) on up to `workers` threads.
/// Work items are claimed dynamically; callers must make each item write only
/// to its own output slot so results do not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn &&fn) {
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++)
                fn(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = count;
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(body);
    body();
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

/// Splits [0, n) into fixed blocks whose boundaries depend only on n.
struct Blocks {
    std::size_t n;
    std::size_t size;

    explicit Blocks(std::size_t n_, std::size_t min_block = 32, std::size_t max_blocks = 512)
        : n(n_), size(std::max(min_block, (n_ + max_blocks - 1) / max_blocks)) {}

    std::size_t count() const { return (n + size - 1) / size; }
    std::size_t begin(std::size_t b) const { return b * size; }
    std::size_t end(std::size_t b) const { return std::min(n, (b + 1) * size); }
};

} // namespace hashnet::detail
