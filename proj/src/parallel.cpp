#include "crscore/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crscore::parallel {

int thread_count() {
#ifdef _OPENMP
  if (const char* env = std::getenv("CRSCORE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const int n = omp_get_max_threads();
  return n < 1 ? 1 : n;
#else
  return 1;
#endif
}

}  // namespace crscore::parallel
