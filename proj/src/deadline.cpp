#include "germcalc/deadline.hpp"

#include "germcalc/errors.hpp"

namespace germcalc {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;
}

void set_deadline(std::chrono::steady_clock::time_point when) { g_deadline = when; }

void clear_deadline() { g_deadline.reset(); }

void check_deadline() {
  if (g_deadline && std::chrono::steady_clock::now() > *g_deadline)
    throw TimeoutError("computation exceeded the time budget");
}

DeadlineGuard::DeadlineGuard(std::optional<std::chrono::milliseconds> budget)
    : previous_(g_deadline) {
  if (budget) g_deadline = std::chrono::steady_clock::now() + *budget;
}

DeadlineGuard::~DeadlineGuard() { g_deadline = previous_; }

}  // namespace germcalc
