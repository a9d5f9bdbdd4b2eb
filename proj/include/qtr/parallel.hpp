#pragma once

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtr::par {

// jobs <= 1 selects the serial reference path; jobs > 1 selects the OpenMP
// kernel.  Both paths return identical results (the serial loop is the
// reference the tests compare against).

inline int max_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Smallest index i in [0, count) with check(i) == false, or -1 if none.
template <class Fn>
long long first_failure_serial(long long count, Fn&& check) {
    for (long long i = 0; i < count; ++i) {
        if (!check(i)) return i;
    }
    return -1;
}

template <class Fn>
long long first_failure(long long count, Fn&& check, int jobs) {
#ifdef _OPENMP
    if (jobs > 1 && count > 1) {
        std::atomic<long long> best{count};
        #pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (long long i = 0; i < count; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) continue;
            if (!check(i)) {
                long long cur = best.load(std::memory_order_relaxed);
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        long long b = best.load();
        return b == count ? -1 : b;
    }
#endif
    (void)jobs;
    return first_failure_serial(count, check);
}

// Evaluates fn(i) for every i in [0, count); results land in caller-owned
// storage indexed by i, so the outcome is independent of the schedule.
template <class Fn>
void for_each_index(long long count, Fn&& fn, int jobs) {
#ifdef _OPENMP
    if (jobs > 1 && count > 1) {
        #pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
#endif
    (void)jobs;
    for (long long i = 0; i < count; ++i) fn(i);
}

} // namespace qtr::par
