#pragma once

#include <cstddef>
#include <functional>

namespace gftv {

// Worker cap: GFTV_THREADS environment variable; 0, unset, or unparseable
// means one worker per hardware thread.
int thread_budget();

// Runs body(0) .. body(count-1) across the thread budget.  Work items must
// be independent; outputs should be written to disjoint slots so results
// do not depend on scheduling.  The first exception is rethrown after all
// workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace gftv
