#include "lagmesh/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace lagmesh {

namespace {

std::atomic<long> g_cap{-1};  // -1: unset, fall through to env

long env_cap() {
  const char* raw = std::getenv("LAGMESH_THREADS");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v < 0) return 0;
  return v;
}

}  // namespace

void set_thread_cap(long cap) { g_cap.store(cap < 0 ? -1 : cap); }

long thread_budget() {
  long cap = g_cap.load();
  if (cap < 0) cap = env_cap();
  if (cap == 0) cap = static_cast<long>(std::thread::hardware_concurrency());
  return cap > 0 ? cap : 1;
}

void parallel_for(long n, const std::function<void(long)>& body) {
  if (n <= 0) return;
  const long workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (long w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(failure);
}

}  // namespace lagmesh
