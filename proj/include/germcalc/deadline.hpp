#ifndef GERMCALC_DEADLINE_HPP
#define GERMCALC_DEADLINE_HPP

#include <chrono>
#include <optional>

namespace germcalc {

// Cooperative per-thread deadline. Long-running loops poll check_deadline(),
// which throws TimeoutError once the deadline has passed.
void set_deadline(std::chrono::steady_clock::time_point when);
void clear_deadline();
void check_deadline();

// Scoped deadline; restores the previous one on exit.
class DeadlineGuard {
 public:
  explicit DeadlineGuard(std::optional<std::chrono::milliseconds> budget);
  ~DeadlineGuard();
  DeadlineGuard(const DeadlineGuard&) = delete;
  DeadlineGuard& operator=(const DeadlineGuard&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

}  // namespace germcalc

#endif
