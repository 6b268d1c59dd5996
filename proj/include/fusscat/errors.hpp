#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusscat {

/// Raised when inputs violate an operation's preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed the configured search volume.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t cap)
      : std::runtime_error(what + ": estimated volume " + std::to_string(estimate) +
                           " exceeds cap " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

/// Upper bound on the number of candidate points any enumeration may visit.
struct SearchLimits {
  std::uint64_t max_volume = 50'000'000;

  void check(const std::string& what, std::uint64_t estimate) const {
    if (estimate > max_volume) throw CapExceeded(what, estimate, max_volume);
  }
};

}  // namespace fusscat
