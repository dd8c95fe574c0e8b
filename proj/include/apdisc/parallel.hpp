#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace apdisc {

/// Computes compute(0..count-1) on `workers` threads and hands each result to
/// sink(i, result) on the calling thread in increasing i. Workers run at most
/// `window` indices ahead of the sink. sink returns false to stop early.
/// The first exception thrown by compute is rethrown after all workers join.
template <class Compute, class Sink>
void ordered_parallel_for(std::size_t count, unsigned workers, Compute compute, Sink sink,
                          std::size_t window = 0) {
  using Result = decltype(compute(std::size_t{0}));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!sink(i, compute(i))) return;
    }
    return;
  }
  if (window == 0) window = 4 * static_cast<std::size_t>(workers);

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Result> ready;
  std::size_t next_claim = 0;
  std::size_t next_emit = 0;
  bool stop = false;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || next_claim >= count || next_claim < next_emit + window; });
        if (stop || next_claim >= count) return;
        i = next_claim++;
      }
      try {
        Result r = compute(i);
        std::lock_guard lock(mu);
        ready.emplace(i, std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

  for (std::size_t e = 0; e < count; ++e) {
    Result r;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return stop || ready.count(e) != 0; });
      if (ready.count(e) == 0) break;
      auto node = ready.extract(e);
      r = std::move(node.mapped());
      next_emit = e + 1;
    }
    cv.notify_all();
    if (!sink(e, std::move(r))) {
      std::lock_guard lock(mu);
      stop = true;
      break;
    }
  }
  {
    std::lock_guard lock(mu);
    stop = true;
  }
  cv.notify_all();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace apdisc
