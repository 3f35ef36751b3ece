#include "modeseek/threading.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace modeseek {

std::size_t worker_count(std::size_t requested) {
  std::size_t n = requested;
  if (n == 0) {
    n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  if (const char* env = std::getenv("MODESEEK_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) {
        n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
      }
    } catch (const std::exception&) {
      // unparsable value: ignore the cap
    }
  }
  return n;
}

void parallel_for(std::size_t begin, std::size_t end, std::size_t threads,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t count = (end > begin) ? end - begin : 0;
  if (count == 0) {
    return;
  }
  threads = std::min(std::max<std::size_t>(threads, 1), count);
  if (threads == 1) {
    for (std::size_t i = begin; i < end; ++i) {
      fn(i);
    }
    return;
  }

  // Work items vary a lot in cost (trajectory lengths differ), so workers
  // pull the next index from a shared counter. Each index still writes only
  // its own slot, keeping results independent of the scheduling.
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::size_t> next{begin};
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([end, t, &next, &fn, &errors] {
      try {
        for (std::size_t i = next.fetch_add(1, std::memory_order_relaxed); i < end;
             i = next.fetch_add(1, std::memory_order_relaxed)) {
          fn(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace modeseek
