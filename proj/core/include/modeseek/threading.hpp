#pragma once

#include <cstddef>
#include <functional>

namespace modeseek {

/// Resolves the worker count: `requested` when nonzero, otherwise the
/// hardware concurrency; in both cases capped by the MODESEEK_THREADS
/// environment variable when it parses as a positive integer. Always >= 1.
std::size_t worker_count(std::size_t requested = 0);

/// Runs fn(i) for i in [begin, end), statically chunked over `threads`
/// workers. Each index is processed exactly once; fn must only write to
/// per-index state, which makes the result independent of the worker count.
void parallel_for(std::size_t begin, std::size_t end, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace modeseek
