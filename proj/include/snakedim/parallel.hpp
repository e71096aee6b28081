#ifndef SNAKEDIM_PARALLEL_HPP
#define SNAKEDIM_PARALLEL_HPP

#include <algorithm>
#include <thread>
#include <vector>

namespace snakedim {

// Splits [0, n) into contiguous chunks, one worker per chunk. Callers own
// determinism: per-chunk results must be merged in chunk order.
template <typename Fn>
void parallel_chunks(int n, int threads, Fn&& fn) {
    threads = std::max(1, std::min(threads, n == 0 ? 1 : n));
    if (threads == 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    int base = n / threads, extra = n % threads, begin = 0;
    for (int t = 0; t < threads; ++t) {
        int len = base + (t < extra ? 1 : 0);
        workers.emplace_back([&fn, t, begin, len] { fn(t, begin, begin + len); });
        begin += len;
    }
    for (auto& w : workers) w.join();
}

} // namespace snakedim

#endif
