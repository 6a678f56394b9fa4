#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specex::scan {

struct Options {
    bool parallel = true;
    int threads = 0;  // 0 = library default (all available cores)
};

/// Serial reference for the parallel map; kept as the ground truth the
/// OpenMP path is tested and benchmarked against.
template <class R, class Fn>
std::vector<R> map_ordered_serial(std::size_t count, Fn&& fn) {
    std::vector<R> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

/// Deterministic parallel map: fn(i) writes into slot i, so the result is
/// ordered exactly as the serial reference regardless of scheduling.
template <class R, class Fn>
std::vector<R> map_ordered(std::size_t count, Fn&& fn, const Options& opt = {}) {
    if (!opt.parallel || count < 2) return map_ordered_serial<R>(count, std::forward<Fn>(fn));
    std::vector<R> out(count);
#ifdef _OPENMP
    const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
#endif
    return out;
}

}  // namespace specex::scan
