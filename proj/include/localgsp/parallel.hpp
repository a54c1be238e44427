#pragma once

// Data-parallel loop helper shared by every per-node / per-sample kernel.
//
// Each kernel has two backends: a plain serial loop kept as the reference
// implementation, and an OpenMP loop. Kernels write into preallocated
// per-index slots and reduce serially afterwards, so results never depend on
// the backend or the worker count.

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace localgsp {

enum class Backend { serial, openmp };

inline void set_num_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

inline int max_threads() { return omp_get_max_threads(); }

// Calls body(i) for i in [0, n). Exceptions thrown inside the OpenMP region
// are captured; the one with the lowest index is rethrown so the reported
// error matches the serial backend.
template <class Body>
void parallel_for(std::size_t n, Backend backend, Body&& body) {
  if (backend == Backend::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::size_t first_index = n;
  std::mutex guard;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (static_cast<std::size_t>(i) < first_index) {
        first_index = static_cast<std::size_t>(i);
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace localgsp
