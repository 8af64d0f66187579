#include "gjps/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gjps {

int max_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  int limit = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("GJPS_THREADS")) {
    int requested = std::atoi(env);
    if (requested >= 1) limit = std::min(limit, requested);
  }
  return limit;
}

void parallel_for(long count, const std::function<void(long)>& fn) {
  if (count <= 0) return;
  long threads = std::min<long>(max_threads(), count);
  if (threads <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (long t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        long i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gjps
