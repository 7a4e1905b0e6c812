#pragma once

#include <chrono>
#include <optional>

namespace eqw {

/// Wall-clock budget for the exact solvers. A default-constructed deadline
/// never expires; a zero budget expires immediately.
class Deadline {
 public:
  Deadline() = default;

  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const {
    return end_.has_value() && std::chrono::steady_clock::now() >= *end_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

}  // namespace eqw
