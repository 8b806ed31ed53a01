#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace yw {

template <class F>
auto parallel_over_m(int M, int jobs, F f) -> std::vector<decltype(f(0))> {
  using R = decltype(f(0));
  std::vector<R> out(M + 1);
  if (jobs <= 1 || M <= 0) {
    for (int m = 0; m <= M; ++m) out[m] = f(m);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      // Largest sizes first: they dominate the cost.
      int i = next.fetch_add(1);
      if (i > M) return;
      int m = M - i;
      try {
        out[m] = f(m);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int n = std::min(jobs, M + 1);
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace yw
