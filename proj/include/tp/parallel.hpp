#ifndef TP_PARALLEL_HPP
#define TP_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace tp {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn over [0, count) split into contiguous chunks, one per worker.
/// Results must not depend on the chunking (callers keep per-item work
/// independent and reductions per-item sequential), so any thread count
/// yields identical output.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    int workers = resolve_threads(threads);
    if (workers <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = count / workers;
    std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        std::size_t end = begin + chunk + (static_cast<std::size_t>(w) < extra ? 1 : 0);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace tp

#endif  // TP_PARALLEL_HPP
