#ifndef CONDLAB_PARALLEL_HPP
#define CONDLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace condlab {

/// Number of workers used by parallel_for when jobs <= 0.
int default_jobs();
void set_default_jobs(int jobs);

/// Runs body(i) for i in [begin, end) on a worker pool. Bodies must be
/// independent; results should be written to preallocated slots so that
/// reductions stay ordered and runs stay deterministic.
inline void parallel_for(long begin, long end, const std::function<void(long)>& body, int jobs = 0) {
    const long count = end - begin;
    if (count <= 0) return;
    int workers = jobs > 0 ? jobs : default_jobs();
    workers = int(std::min<long>(workers, count));
    if (workers <= 1) {
        for (long i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<long> next(begin);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= end) return;
                body(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace condlab

#endif
