// parallel.hpp - minimal thread-pool-free parallel loop
//
// Thread count is capped by the CHIRALIX_THREADS environment variable (or
// set_max_threads). Work items write to disjoint output slots supplied by the
// caller, so results are deterministic regardless of scheduling.
#pragma once

#include <cstddef>
#include <functional>

namespace chiralix::parallel {

// Effective cap: CHIRALIX_THREADS if set and valid, else hardware concurrency.
int max_threads();

// Programmatic override; k < 1 restores the environment-derived default.
void set_max_threads(int k);

// Runs fn(i) for i in [0, n). Falls back to a plain loop when the cap is 1 or
// n is small. Exceptions from fn propagate to the caller.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace chiralix::parallel
