#ifndef SVDMARK_PARALLEL_HPP
#define SVDMARK_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace svdmark::detail {

// Runs fn(i) for i in [0, count) over contiguous chunks. Each index is
// processed exactly once and writes only its own output slots, so the
// result does not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    unsigned want = threads > 0 ? static_cast<unsigned>(threads)
                                : std::max(1u, std::thread::hardware_concurrency());
    if (want > count)
        want = static_cast<unsigned>(count ? count : 1);
    if (want <= 1 || count < 256) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const std::size_t chunk = (count + want - 1) / want;
    std::vector<std::thread> pool;
    pool.reserve(want);
    for (unsigned t = 0; t < want; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(begin + chunk, count);
        if (begin >= end)
            break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace svdmark::detail

#endif
