#pragma once

#include <cstddef>
#include <functional>

namespace branchwork {

/// Runs body(0), ..., body(count-1) on up to `jobs` threads. Work items index
/// into preallocated output slots, so results never depend on the schedule.
/// The first exception raised by any item is rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

} // namespace branchwork
