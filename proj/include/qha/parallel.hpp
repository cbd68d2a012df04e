#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qha::detail {

/**
 * Worker count for fork-join loops. QHA_THREADS caps it when set to a
 * positive integer; otherwise the hardware concurrency is used. Read once.
 */
inline unsigned thread_budget() {
    static const unsigned cached = [] {
        if (const char* env = std::getenv("QHA_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) {
                return static_cast<unsigned>(std::min<long>(v, 1024));
            }
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : hw;
    }();
    return cached;
}

/**
 * Runs body(i) for i in [0, count). Callers must write results into
 * pre-indexed slots; the scheduling order is unspecified, so any reduction
 * has to happen after the join, in index order, to keep runs deterministic.
 */
template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
    const std::size_t workers =
        std::min<std::size_t>(thread_budget(), count == 0 ? 1 : count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1)) {
                body(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qha::detail
