#pragma once

#include <chrono>
#include <optional>

namespace grpverify {

using Clock = std::chrono::steady_clock;

// Cooperative per-thread deadline. Long loops call check_deadline(), which
// throws TimeoutError once the deadline installed on this thread has passed.
class DeadlineScope {
 public:
  explicit DeadlineScope(Clock::duration budget);
  explicit DeadlineScope(std::optional<Clock::time_point> deadline);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<Clock::time_point> previous_;
};

std::optional<Clock::time_point> current_deadline();
void check_deadline();

}  // namespace grpverify
