#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "sigstack/permutation.hpp"

namespace sigstack {

/// Worker count for exhaustive scans. 0 picks the hardware concurrency.
struct Parallelism {
  unsigned threads = 0;

  unsigned resolved() const {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

/// Visits every permutation of S_n, split into n tasks by first entry.
///
/// `make()` builds one accumulator per task; `visit(acc, word)` is called on
/// each permutation of that task in lexicographic order. The accumulators are
/// returned indexed by first entry - 1, so any fold over them in index order
/// is independent of the worker count. For n = 0 there is a single task
/// holding the empty permutation.
template <class Make, class Visit>
auto scan_by_first_entry(std::size_t n, Parallelism par, Make make, Visit visit) {
  using Acc = decltype(make());
  const std::size_t tasks = std::max<std::size_t>(n, 1);
  std::vector<Acc> results;
  results.reserve(tasks);
  for (std::size_t i = 0; i < tasks; ++i) results.push_back(make());

  auto run_task = [&](std::size_t task) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::size_t fixed = 0;
    if (n > 0) {
      std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(task),
                  word.begin() + static_cast<std::ptrdiff_t>(task) + 1);
      fixed = 1;
    }
    do {
      visit(results[task], std::span<const int>(word));
    } while (next_tail_permutation(word, fixed));
  };

  const unsigned workers = std::min<unsigned>(par.resolved(), static_cast<unsigned>(tasks));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) run_task(t);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < tasks; t = next++) {
        try {
          run_task(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace sigstack
