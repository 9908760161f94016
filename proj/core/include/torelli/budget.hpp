#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "torelli/error.hpp"

namespace torelli {

/// Cooperative wall-clock budget. Long computations call `check()` at
/// iteration boundaries; an exhausted budget raises ResourceLimit.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(double seconds)
      : deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(seconds))) {}

  static Budget unlimited() { return Budget{}; }

  bool exhausted() const { return deadline_ && Clock::now() > *deadline_; }

  void check(const std::string& stage) const {
    if (exhausted()) throw ResourceLimit(stage, "time budget exhausted");
  }

 private:
  std::optional<Clock::time_point> deadline_;
};

}  // namespace torelli
