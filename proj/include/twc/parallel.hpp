#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace twc {

/// Runs fn(begin, end) over disjoint contiguous ranges of [0, n). Each range
/// writes only its own slice of any shared output, so results do not depend
/// on the thread count.
template <typename Fn>
void parallel_ranges(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2048) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    const std::size_t chunk = (n + parts - 1) / parts;
    std::vector<std::thread> pool;
    pool.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t begin = p * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace twc
