#include "entcoh/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace entcoh {

int thread_cap() {
  const char* env = std::getenv("ENTCOH_THREADS");
  if (env == nullptr || *env == '\0')
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const long cap = std::strtol(env, nullptr, 10);
  return cap <= 0 ? 1 : static_cast<int>(cap);
}

void parallel_for(Index n, const std::function<void(Index)>& fn) {
  const int workers = std::min<int>(thread_cap(), static_cast<int>(n));
  if (workers <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (Index i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace entcoh
