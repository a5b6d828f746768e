#pragma once

#include <functional>

namespace specpot::par {

/// Default worker count: SPECPOT_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
int default_threads();

/// Process-wide cap applied by parallel_for; 0 means "use default_threads()".
void set_thread_cap(int cap);
int thread_cap();

/// Run fn(i) for i in [0, n). Work is assigned by index stripe, and each fn
/// call must write only to its own slot of any shared output, so results are
/// identical for every thread count (final reductions stay with the caller).
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace specpot::par
