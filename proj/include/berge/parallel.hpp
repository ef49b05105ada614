#ifndef BERGE_PARALLEL_HPP
#define BERGE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace berge {

// Worker-count context handed down from the CLI; modules never spawn
// threads on their own initiative.
struct parallelism {
    int workers = 1;
};

// Runs fn(i) for i in [0, count) on up to ctx.workers threads.
// Work is claimed from a shared counter; fn must make per-index results
// independent of scheduling.
inline void parallel_for(std::size_t count, const parallelism& ctx,
                         const std::function<void(std::size_t)>& fn) {
    int workers = ctx.workers;
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace berge

#endif
