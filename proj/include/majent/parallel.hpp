#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace majent {

/// Worker count for internal parallel loops; 1 runs everything inline.
void set_thread_count(int count);
int thread_count();

namespace detail {
/// True on threads started by parallel_for; nested loops then run inline.
bool& in_worker();
}  // namespace detail

/// Calls fn(i) for i in [0, count). Work is split into contiguous blocks, so
/// callers that write results by index get order-independent output. The
/// exception from the lowest failing block is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
  if (workers <= 1 || detail::in_worker()) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  const std::size_t block = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * block;
    const std::size_t hi = std::min(count, lo + block);
    pool.emplace_back([lo, hi, w, &fn, &errors] {
      detail::in_worker() = true;
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace majent
