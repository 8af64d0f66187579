#pragma once

#include <functional>

namespace gjps {

// Runs fn(i) for i in [0, count), possibly on several threads. Results must
// be written to independent slots; scheduling never affects output. Thread
// count is capped by the GJPS_THREADS environment variable (1 = serial).
void parallel_for(long count, const std::function<void(long)>& fn);

int max_threads();

}  // namespace gjps
