#pragma once

#include <cstddef>
#include <functional>

namespace pencilscope {

/// Thread count for parallel sweeps: PENCILSCOPE_THREADS if set and positive,
/// otherwise the OpenMP default.
int thread_cap();

/// out[k] = f(k) for k in [0, count), in parallel. Each slot is written once,
/// so the result does not depend on scheduling. If any f(k) throws, the
/// exception from the smallest such k is rethrown after the loop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace pencilscope
