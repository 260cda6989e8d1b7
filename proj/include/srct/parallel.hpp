#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace srct {

/// Worker count from SRCT_THREADS, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("SRCT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies f to every input; results keep input order regardless of the
/// number of workers. The first exception thrown by f is rethrown.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& inputs, F f) -> std::vector<decltype(f(inputs.front()))> {
  using Out = decltype(f(inputs.front()));
  std::vector<Out> out(inputs.size());
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max<std::size_t>(inputs.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = f(inputs[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      try {
        out[i] = f(inputs[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace srct
