#pragma once

#include <atomic>
#include <exception>

#include "fockmetric/exec.hpp"

namespace fockmetric::detail {

// Runs fn(i) for i in [0, n). The serial path is the reference
// implementation; the OpenMP path assumes fn(i) touches only slot i of any
// shared output, so the two paths produce bitwise-identical results. An
// exception thrown by fn must not cross the OpenMP region boundary, so the
// first one is captured and rethrown after the loop joins.
template <typename Fn>
void for_each_index(int n, Exec exec, Fn&& fn) {
#ifndef _OPENMP
    exec = Exec::serial;
#endif
    if (exec == Exec::serial) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            fn(i);
        } catch (...) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true))
                first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#endif
}

}  // namespace fockmetric::detail
