#ifndef LRCMR_PARALLEL_HPP
#define LRCMR_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace lrcmr {

/// Splits [0, total) into contiguous chunks, runs `work(lo, hi, out)` on each
/// (possibly on worker threads), and merges the per-chunk results in chunk
/// order with `merge(acc, out)`. Merging in chunk order keeps results
/// deterministic regardless of the job count.
template <typename R, typename Work, typename Merge>
R chunked_reduce(std::size_t total, unsigned jobs, R init, Work work, Merge merge) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    if (jobs == 1 || total < 2 * jobs) {
        R out = init;
        work(0, total, out);
        return out;
    }
    std::size_t nchunks = jobs;
    std::vector<R> partial(nchunks, init);
    std::vector<std::thread> threads;
    threads.reserve(nchunks);
    std::size_t base = total / nchunks, extra = total % nchunks, lo = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t hi = lo + base + (c < extra ? 1 : 0);
        threads.emplace_back([&work, &partial, c, lo, hi]() { work(lo, hi, partial[c]); });
        lo = hi;
    }
    for (auto& t : threads) t.join();
    R acc = init;
    for (std::size_t c = 0; c < nchunks; ++c) merge(acc, partial[c]);
    return acc;
}

}  // namespace lrcmr

#endif
