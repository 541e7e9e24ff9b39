#ifndef SAXL_BUDGET_HPP
#define SAXL_BUDGET_HPP

#include <chrono>
#include <optional>

#include "saxl/error.hpp"

namespace saxl {

/// Optional wall-clock cap shared by the long-running searches. A default
/// constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::optional<std::chrono::duration<double>> budget) {
    if (budget) {
      at_ = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(*budget);
    }
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check(const char* what) const {
    if (expired()) {
      throw Error(Errc::BudgetExceeded,
                  std::string("time budget exhausted during ") + what);
    }
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace saxl

#endif  // SAXL_BUDGET_HPP
