#pragma once

#include <cstddef>
#include <functional>

namespace fpdea {

// Worker count for replication loops. Reads FPDEA_THREADS; unset, empty
// or 0 means one worker per hardware thread.
std::size_t thread_budget();

// Runs body(0..n-1) on up to n_threads workers pulling indices from a
// shared counter. If any call throws, the exception from the lowest
// index is rethrown after all workers finish, so failure reporting does
// not depend on scheduling.
void parallel_for(std::size_t n, std::size_t n_threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace fpdea
