#pragma once

namespace gsr {

/// Number of worker threads used by row assembly, matrix products and Monte
/// Carlo paths. Defaults to the hardware concurrency, capped by the
/// GSR_THREADS environment variable when it is set to a positive integer.
int thread_count();

/// Overrides the thread count for the rest of the process (values < 1 reset
/// to the environment-derived default).
void set_thread_count(int threads);

}  // namespace gsr
