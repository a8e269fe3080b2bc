#pragma once

// Deterministic work partitioning.  Work is cut into fixed blocks assigned
// round-robin; accumulators must merge commutatively, which makes the final
// result independent of the worker count and of scheduling order.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace nplay {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

template <class Acc, class PerBlock>
Acc parallel_block_reduce(std::uint64_t num_blocks, int workers, PerBlock per_block) {
    workers = resolve_workers(workers);
    if (static_cast<std::uint64_t>(workers) > num_blocks)
        workers = static_cast<int>(std::max<std::uint64_t>(1, num_blocks));
    std::vector<Acc> acc(workers);
    if (workers == 1) {
        for (std::uint64_t b = 0; b < num_blocks; ++b) per_block(b, acc[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                for (std::uint64_t b = w; b < num_blocks; b += workers) per_block(b, acc[w]);
            });
        for (auto& t : threads) t.join();
    }
    Acc total{};
    for (const auto& a : acc) total.merge(a);
    return total;
}

}  // namespace nplay
