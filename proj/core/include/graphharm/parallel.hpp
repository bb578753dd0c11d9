#pragma once

#include <cstddef>
#include <functional>

namespace graphharm {

/// Worker count from GRAPHHARM_THREADS (0 or unset: hardware concurrency).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) over contiguous static blocks. Callers write
/// only to slot i, so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace graphharm
