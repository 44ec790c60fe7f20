#include "pencilscope/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <limits>

namespace pencilscope {

int thread_cap() {
    if (const char* s = std::getenv("PENCILSCOPE_THREADS")) {
        const int v = std::atoi(s);
        if (v > 0) return v;
    }
    return omp_get_max_threads();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    std::exception_ptr err;
    std::size_t err_index = std::numeric_limits<std::size_t>::max();
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_cap())
    for (long long k = 0; k < n; ++k) {
        try {
            f(static_cast<std::size_t>(k));
        } catch (...) {
#pragma omp critical(pencilscope_parallel_error)
            if (static_cast<std::size_t>(k) < err_index) {
                err_index = static_cast<std::size_t>(k);
                err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace pencilscope
