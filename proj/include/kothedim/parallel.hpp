#pragma once

#include <cstdint>
#include <functional>

namespace kothedim {

/// Number of worker threads for truncation scans.  `requested` wins if
/// positive; otherwise hardware concurrency capped by KOTHEDIM_THREADS.
int scan_thread_count(int requested = 0);

/// max of f(t) over ordinals t in [lo, hi], partitioned across threads.
/// max is order-free, so the reduction is deterministic for any chunking.
double parallel_max(std::int64_t lo, std::int64_t hi,
                    const std::function<double(std::int64_t)>& f, int threads = 0);

/// min counterpart of parallel_max.
double parallel_min(std::int64_t lo, std::int64_t hi,
                    const std::function<double(std::int64_t)>& f, int threads = 0);

}  // namespace kothedim
