#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace cyclebound {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exhausted") {}
};

// Wall-clock allowance shared by the exact solvers working on one graph.
// Solvers call tick() in their inner loops; the clock is consulted every
// kStride ticks and BudgetExceeded is thrown once the deadline has passed.
// A default-constructed Budget is unlimited and never mutates, so the shared
// instance returned by none() is safe to use from several threads.
class Budget {
 public:
  Budget() = default;
  explicit Budget(std::chrono::milliseconds limit)
      : deadline_(std::chrono::steady_clock::now() + limit) {}

  static Budget from_millis(std::optional<std::int64_t> ms) {
    if (!ms) return Budget{};
    return Budget{std::chrono::milliseconds{*ms}};
  }

  static Budget& none() {
    static Budget unlimited;
    return unlimited;
  }

  bool limited() const { return deadline_.has_value(); }

  void tick() {
    if (!deadline_) return;
    if (expired_) throw BudgetExceeded{};
    if ((ticks_++ % kStride) != 0) return;
    if (std::chrono::steady_clock::now() >= *deadline_) {
      expired_ = true;
      throw BudgetExceeded{};
    }
  }

 private:
  static constexpr std::uint64_t kStride = 256;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
  bool expired_ = false;  // stays exhausted once the deadline is seen
};

}  // namespace cyclebound
