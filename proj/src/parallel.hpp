#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kingmesh::detail {

// Evaluates work(0..count-1) on up to `jobs` threads and returns the results in
// index order, so any fold over them is independent of scheduling.
template <class Result, class Work>
std::vector<Result> run_indexed(int count, int jobs, Work&& work) {
  std::vector<Result> results(static_cast<std::size_t>(std::max(count, 0)));
  const int workers = std::clamp(jobs, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) results[i] = work(i);
    return results;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          results[i] = work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace kingmesh::detail
