#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace bellrec {

enum class Exec { serial, parallel };

// Runs body(i) for i in [0, count). Under Exec::parallel the iterations are
// spread over OpenMP threads with dynamic scheduling. An exception thrown by
// any iteration is rethrown on the calling thread; when several iterations
// throw, the one with the smallest index wins so failures are reproducible.
template <class Body>
void parallel_for(Exec exec, std::size_t count, Body&& body)
{
    if (exec == Exec::serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }

    std::exception_ptr first_error;
    std::size_t first_index = std::numeric_limits<std::size_t>::max();
    const auto n = static_cast<long>(count);

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(bellrec_parallel_for_error)
            {
                if (static_cast<std::size_t>(i) < first_index) {
                    first_index = static_cast<std::size_t>(i);
                    first_error = std::current_exception();
                }
            }
        }
    }

    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

inline int max_threads() { return omp_get_max_threads(); }

}  // namespace bellrec
