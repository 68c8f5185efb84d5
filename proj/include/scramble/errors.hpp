#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace scramble {

/// Input exceeds a documented desk-scale bound (vertex cap, state cap, ...).
class size_bound_error : public std::runtime_error {
 public:
  explicit size_bound_error(const std::string& what) : std::runtime_error(what) {}
};

/// A search hit its deadline. Carries whatever bounds were proven so far;
/// -1 means no bound of that kind was established.
class timeout_error : public std::runtime_error {
 public:
  timeout_error(const std::string& what, int lower, int upper)
      : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
  int lower_bound;
  int upper_bound;
};

/// Cooperative deadline for the exponential searches. Default-constructed
/// deadlines never expire.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_seconds(double secs) {
    Deadline d;
    d.enabled_ = true;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(secs));
    return d;
  }
  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= at_;
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point at_{};
};

}  // namespace scramble
