#include "ehrhart/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace ehrhart {

unsigned worker_count(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("EHRHART_THREADS")) {
    long cap = std::atol(env);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw)
      hw = static_cast<unsigned>(cap);
  }
  if (jobs < hw) hw = static_cast<unsigned>(jobs);
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const unsigned workers = worker_count(n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto body = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (std::thread& t : pool) t.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace ehrhart
