#pragma once

#include <cstddef>
#include <functional>

namespace rhalton {

// Environment variable capping worker threads (positive integer).
inline constexpr const char* kThreadsEnv = "RHALTON_THREADS";

// Workers to use: RHALTON_THREADS if set and valid, else hardware concurrency.
std::size_t worker_count();

// Calls body(i) for i in [0, count). Work is split into contiguous chunks, one
// per worker; callers write results by index so output never depends on the
// schedule. The first exception thrown by any body is rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rhalton
