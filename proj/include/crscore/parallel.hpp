#pragma once

namespace crscore::parallel {

// Worker count for the OpenMP kernels. CRSCORE_THREADS=k (k > 0) pins the
// count to k, CRSCORE_THREADS=0 or unset defers to the OpenMP runtime;
// builds without OpenMP always report 1. Kernel output never depends on
// this value, only wall time does.
int thread_count();

}  // namespace crscore::parallel
