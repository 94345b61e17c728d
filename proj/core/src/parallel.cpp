#include "matsec/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace matsec {

int chunk_count(std::int64_t total, std::int64_t chunk_size) {
  if (total <= 0) return 0;
  return static_cast<int>((total + chunk_size - 1) / chunk_size);
}

void for_each_chunk(std::int64_t total, std::int64_t chunk_size, int threads,
                    const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  const int chunks = chunk_count(total, chunk_size);
  if (chunks == 0) return;

  auto run_chunk = [&](int ci) {
    const std::int64_t begin = static_cast<std::int64_t>(ci) * chunk_size;
    const std::int64_t end = std::min(total, begin + chunk_size);
    fn(begin, end, ci);
  };

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > chunks) workers = chunks;

  if (workers == 1) {
    for (int ci = 0; ci < chunks; ++ci) run_chunk(ci);
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const int ci = next.fetch_add(1);
      if (ci >= chunks) return;
      try {
        run_chunk(ci);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers - 1));
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace matsec
