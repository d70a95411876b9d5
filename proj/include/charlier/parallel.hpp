#pragma once

#include <functional>

namespace charlier {

/// Worker count: CHARLIER_LATTICE_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency().
int worker_count();

/// Runs body(i) for i in [0, count). Each index must only write its own output slot.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace charlier
