#include "commtuple/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace commtuple {

int worker_count() {
  if (const char* env = std::getenv("COMMTUPLE_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) return requested;
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int chunk_count(std::uint64_t total) {
  const auto workers = static_cast<std::uint64_t>(worker_count());
  return static_cast<int>(std::max<std::uint64_t>(1, std::min(workers, total)));
}

int parallel_chunks(std::uint64_t total,
                    const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  const int chunks = chunk_count(total);
  const std::uint64_t step = total / static_cast<std::uint64_t>(chunks);
  const std::uint64_t extra = total % static_cast<std::uint64_t>(chunks);
  auto bounds = [&](int c) {
    const auto uc = static_cast<std::uint64_t>(c);
    const std::uint64_t first = uc * step + std::min(uc, extra);
    return std::pair{first, first + step + (uc < extra ? 1 : 0)};
  };
  if (chunks == 1) {
    body(0, 0, total);
    return 1;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(chunks));
  for (int c = 0; c < chunks; ++c) {
    const auto [first, last] = bounds(c);
    threads.emplace_back(body, c, first, last);
  }
  for (auto& t : threads) t.join();
  return chunks;
}

}  // namespace commtuple
