#pragma once

#include <cstdint>

namespace ssi {

/// Monotone logical clock. Injected wherever a timestamp is recorded so that
/// runs with the same start value produce identical artifacts.
class LogicalClock {
 public:
  explicit LogicalClock(std::uint64_t start = 0) : now_(start) {}

  std::uint64_t now() const noexcept { return now_; }

  /// Advances by one tick and returns the new time.
  std::uint64_t tick() noexcept { return ++now_; }

  void advance(std::uint64_t ticks) noexcept { now_ += ticks; }

 private:
  std::uint64_t now_;
};

}  // namespace ssi
