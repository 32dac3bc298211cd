#ifndef HMC_PARALLEL_HPP
#define HMC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hmc {

/// Worker count from HMC_THREADS (default 1).
unsigned worker_count();

/// Runs fn(i) for i in [0, count). Each index writes only its own output, so
/// results do not depend on the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace hmc

#endif
