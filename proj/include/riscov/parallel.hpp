// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace riscov {

// Runs fn over [0,n) split into `workers` contiguous chunks. Results must be
// written to per-index slots (or per-chunk accumulators merged by the caller
// in chunk order) so the outcome is identical for every worker count.
inline void parallel_for(std::size_t n, int workers,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t w =
        std::min<std::size_t>(std::max(workers, 1), n);
    if (w <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(w);
    const std::size_t chunk = (n + w - 1) / w;
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace riscov
