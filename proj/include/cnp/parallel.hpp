#ifndef CNP_PARALLEL_HPP
#define CNP_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cnp {

// Worker count from CNPIERI_THREADS (default: hardware concurrency, at least 1).
int thread_count();
void set_thread_count(int k);  // 0 restores the default

// Evaluate fn(0..count-1) and return the results in index order. The first
// exception thrown by any task is rethrown after all workers finish.
template <class T>
std::vector<T> parallel_map(size_t count, const std::function<T(size_t)>& fn) {
  std::vector<T> out(count);
  size_t workers = std::min<size_t>(size_t(thread_count()), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace cnp

#endif
