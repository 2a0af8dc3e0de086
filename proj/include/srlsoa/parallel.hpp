#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace srlsoa {

// Fixed-size worker pool running statically partitioned index ranges.
// Work for index i always runs with the same contiguous partition for a
// given (range, worker count), and callers reduce partial results in a
// fixed order, so numerical output does not depend on scheduling.
class ThreadPool {
 public:
  explicit ThreadPool(int thread_count) {
    const int workers = thread_count > 1 ? thread_count - 1 : 0;
    for (int w = 0; w < workers; ++w) {
      workers_.emplace_back([this, w] { worker_loop(w); });
    }
  }

  ~ThreadPool() {
    {
      std::unique_lock<std::mutex> lock(mutex_);
      stop_ = true;
    }
    wake_.notify_all();
    for (auto& t : workers_) t.join();
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int size() const { return static_cast<int>(workers_.size()) + 1; }

  // Runs fn(i) for i in [0, count). Blocks until every index is done.
  // The calling thread executes the first partition itself.
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t parts = static_cast<std::size_t>(size());
    if (parts <= 1 || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) fn(i);
      return;
    }
    {
      std::unique_lock<std::mutex> lock(mutex_);
      job_fn_ = &fn;
      job_count_ = count;
      pending_ = static_cast<int>(workers_.size());
      ++generation_;
    }
    wake_.notify_all();
    run_partition(0, count, parts, fn);
    std::unique_lock<std::mutex> lock(mutex_);
    done_.wait(lock, [this] { return pending_ == 0; });
    job_fn_ = nullptr;
  }

 private:
  static void run_partition(std::size_t part, std::size_t count, std::size_t parts,
                            const std::function<void(std::size_t)>& fn) {
    const std::size_t chunk = (count + parts - 1) / parts;
    const std::size_t begin = part * chunk;
    const std::size_t end = begin + chunk < count ? begin + chunk : count;
    for (std::size_t i = begin; i < end; ++i) fn(i);
  }

  void worker_loop(int worker_index) {
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void(std::size_t)>* fn = nullptr;
      std::size_t count = 0;
      {
        std::unique_lock<std::mutex> lock(mutex_);
        wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        fn = job_fn_;
        count = job_count_;
      }
      run_partition(static_cast<std::size_t>(worker_index) + 1, count,
                    static_cast<std::size_t>(size()), *fn);
      {
        std::unique_lock<std::mutex> lock(mutex_);
        if (--pending_ == 0) done_.notify_one();
      }
    }
  }

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(std::size_t)>* job_fn_ = nullptr;
  std::size_t job_count_ = 0;
  std::uint64_t generation_ = 0;
  int pending_ = 0;
  bool stop_ = false;
};

}  // namespace srlsoa
