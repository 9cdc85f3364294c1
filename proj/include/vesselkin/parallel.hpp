#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace vesselkin {

/// Worker count from VESSELKIN_THREADS (default 1).  All parallel loops use a
/// fixed static partition and write disjoint ranges, so results are bitwise
/// identical for any thread count.
inline int thread_count_from_env() {
    const char* s = std::getenv("VESSELKIN_THREADS");
    if (!s) return 1;
    int n = std::atoi(s);
    return n < 1 ? 1 : n;
}

/// f(lo, hi) per worker over a fixed static partition of [0, n).
template <class F>
void parallel_for_ranges(int n, int nthreads, F&& f) {
    if (nthreads <= 1 || n < 2 * nthreads) {
        f(0, n);
        return;
    }
    std::vector<std::thread> ts;
    ts.reserve(nthreads);
    const int chunk = (n + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
        const int lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        ts.emplace_back([lo, hi, &f] { f(lo, hi); });
    }
    for (auto& t : ts) t.join();
}

template <class F>
void parallel_for(int n, int nthreads, F&& f) {
    if (nthreads <= 1 || n < 2 * nthreads) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> ts;
    ts.reserve(nthreads);
    const int chunk = (n + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
        const int lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        ts.emplace_back([lo, hi, &f] {
            for (int i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : ts) t.join();
}

} // namespace vesselkin
