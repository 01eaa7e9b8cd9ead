#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace depthlab {

// Execution policy for the bulk verification sweeps.  Parallel kernels must
// produce the same report as the serial reference; tests compare the two.
enum class Exec { Serial, Parallel };

// Counts failures of `pred` over [0, n) and records the smallest failing
// index.  Deterministic for both policies: the reduction is a min over
// indices, independent of thread scheduling.
struct SweepResult {
    std::int64_t failures = 0;
    std::int64_t first_failure = -1;
};

template <class Pred>
inline SweepResult sweep(std::int64_t n, Exec exec, Pred&& pred) {
    SweepResult res;
    std::int64_t failures = 0;
    std::int64_t first = n;
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : failures) reduction(min : first)
        for (std::int64_t i = 0; i < n; ++i) {
            if (!pred(i)) {
                ++failures;
                if (i < first) first = i;
            }
        }
        res.failures = failures;
        res.first_failure = (first == n) ? -1 : first;
        return res;
    }
#endif
    (void)exec;
    for (std::int64_t i = 0; i < n; ++i) {
        if (!pred(i)) {
            ++failures;
            if (i < first) first = i;
        }
    }
    res.failures = failures;
    res.first_failure = (first == n) ? -1 : first;
    return res;
}

}  // namespace depthlab
