#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

namespace fusscat::detail {

struct Int64Overflow : std::overflow_error {
  Int64Overflow() : std::overflow_error("int64 overflow in exact elimination") {}
};

/// 64-bit integer that throws Int64Overflow instead of wrapping. Used as the
/// fast path of exact elimination; callers retry with Integer on overflow.
class CheckedInt64 {
 public:
  constexpr CheckedInt64() = default;
  constexpr CheckedInt64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Int64Overflow();
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Int64Overflow();
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Int64Overflow();
    return r;
  }
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == -1) return CheckedInt64(0) - a;
    return a.v_ / b.v_;
  }
  friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt64 operator-() const { return CheckedInt64(0) - *this; }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }
  CheckedInt64& operator*=(CheckedInt64 o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt64 a, CheckedInt64 b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(CheckedInt64 a, CheckedInt64 b) { return a.v_ <=> b.v_; }

 private:
  std::int64_t v_ = 0;
};

}  // namespace fusscat::detail

namespace Eigen {
template <>
struct NumTraits<fusscat::detail::CheckedInt64>
    : GenericNumTraits<fusscat::detail::CheckedInt64> {
  using Real = fusscat::detail::CheckedInt64;
  using NonInteger = double;
  using Nested = fusscat::detail::CheckedInt64;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};
}  // namespace Eigen
