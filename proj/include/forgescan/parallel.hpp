#pragma once

#include <thread>
#include <vector>

namespace forgescan {

/// Run fn(0..n-1) across up to `jobs` threads, static stride partitioning.
/// Callers must write to disjoint state per index.
template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int workers = std::min(jobs, n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int t = 0; t < workers; ++t)
        threads.emplace_back([&fn, t, n, workers] {
            for (int i = t; i < n; i += workers) fn(i);
        });
    for (std::thread& th : threads) th.join();
}

/// Resolve a job count: explicit flag, FORGESCAN_JOBS, then hardware threads.
int resolve_jobs(int flag_value);

}  // namespace forgescan
