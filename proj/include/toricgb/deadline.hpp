#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace toricgb {

struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wall-clock limit polled cooperatively by long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  /// No limit.
  Deadline() = default;

  template <class Rep, class Period>
  static Deadline after(std::chrono::duration<Rep, Period> d) {
    Deadline dl;
    dl.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(d);
    return dl;
  }

  [[nodiscard]] bool limited() const noexcept { return at_.has_value(); }
  [[nodiscard]] bool expired() const noexcept { return at_ && Clock::now() >= *at_; }
  void check() const {
    if (expired()) throw TimeoutError("time limit exceeded");
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace toricgb
