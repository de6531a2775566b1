#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace revlab {

enum class ExecutionMode { Serial, Parallel };

// Maps body over [0, n).  The serial path is the reference; the parallel path
// requires body to touch no shared state beyond its own output slot, which
// holds for postulate instance evaluation (pure) writing into per-index
// result vectors.
template <typename Body>
void for_each_index(std::size_t n, ExecutionMode mode, Body&& body) {
#ifdef _OPENMP
  if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace revlab
