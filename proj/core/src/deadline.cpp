#include "grpverify/deadline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "grpverify/error.hpp"
#include "grpverify/parallel.hpp"

namespace grpverify {

namespace {
thread_local std::optional<Clock::time_point> t_deadline;
}  // namespace

DeadlineScope::DeadlineScope(Clock::duration budget) : previous_(t_deadline) {
  const auto d = Clock::now() + budget;
  t_deadline = (previous_ && *previous_ < d) ? *previous_ : d;
}

DeadlineScope::DeadlineScope(std::optional<Clock::time_point> deadline) : previous_(t_deadline) {
  t_deadline = deadline;
}

DeadlineScope::~DeadlineScope() { t_deadline = previous_; }

std::optional<Clock::time_point> current_deadline() { return t_deadline; }

void check_deadline() {
  if (t_deadline && Clock::now() > *t_deadline) throw TimeoutError("deadline exceeded");
}

std::size_t default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto deadline = current_deadline();
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    DeadlineScope scope(deadline);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t count = std::min(jobs, n);
  for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace grpverify
