#ifndef VERONESE_PARALLEL_HPP
#define VERONESE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace veronese::detail {

/* Runs fn(0..count-1) on a small worker pool. Each index owns its output
 * slot, so results are deterministic regardless of scheduling. The first
 * worker exception is rethrown after the join. */
inline void parallel_for_index(std::size_t count, unsigned threads,
                               const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    unsigned hw = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::size_t workers = std::min<std::size_t>(hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace veronese::detail

#endif
