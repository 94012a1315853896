#pragma once

#include <functional>

#include "entcoh/types.hpp"

namespace entcoh {

// Worker cap from ENTCOH_THREADS: 0 means serial, unset means the hardware
// concurrency. Read at each call.
int thread_cap();

// Run fn(0..n-1), possibly concurrently. Callers must make iteration i's
// output depend only on i (results written to per-index slots).
void parallel_for(Index n, const std::function<void(Index)>& fn);

}  // namespace entcoh
