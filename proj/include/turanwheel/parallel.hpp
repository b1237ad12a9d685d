#pragma once

#include <functional>

namespace tw {

// Worker count from the TURANWHEEL_JOBS environment variable, else the
// hardware concurrency (at least 1).
int default_jobs();

// Runs fn(0..tasks-1) across at most `jobs` threads.  Tasks are claimed from
// an atomic counter; callers keep determinism by writing into task-indexed
// slots and merging in index order.
void parallel_for(int tasks, int jobs, const std::function<void(int)>& fn);

} // namespace tw
