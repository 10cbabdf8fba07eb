#pragma once

namespace rwit::detail {

// Data-parallel loop over [0, count). jobs <= 1 runs the plain serial loop,
// anything larger hands the iterations to OpenMP. Workers must not throw
// across the region boundary; callers capture errors per slot.
template <typename F>
void parallel_for(int count, int jobs, F&& f) {
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < count; ++i) f(i);
}

}  // namespace rwit::detail
