#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace edgeal {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("computation exceeded its time budget") {}
};

/// Cooperative wall-clock budget. Long-running kernels poll it and throw
/// TimeoutError once it has passed. A default-constructed deadline never
/// expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }
  static Deadline none() { return {}; }

  bool expired() const { return at_ && Clock::now() >= *at_; }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace edgeal
