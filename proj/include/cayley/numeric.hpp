#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/errors.hpp"

namespace cayley {

/// Default exact-integer coefficient type: arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational weights for probability distributions.
using Rational = boost::multiprecision::cpp_rational;

/// Fixed-width fast path for group-algebra coefficients. Every arithmetic
/// operation detects wraparound and throws Overflow instead of returning a
/// wrong value.
class CheckedInt64 {
public:
  CheckedInt64() = default;
  CheckedInt64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design
  CheckedInt64(int v) : v_(v) {}           // NOLINT

  std::int64_t value() const { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow("int64 add overflow");
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow("int64 sub overflow");
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow("int64 mul overflow");
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a) { return CheckedInt64(0) - a; }
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == 0) throw Error("division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) throw Overflow("int64 div overflow");
    return a.v_ / b.v_;
  }
  friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == 0) throw Error("modulo by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }
  CheckedInt64& operator*=(CheckedInt64 o) { return *this = *this * o; }

  friend bool operator==(CheckedInt64 a, CheckedInt64 b) = default;
  friend auto operator<=>(CheckedInt64 a, CheckedInt64 b) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt64 v) {
    return os << v.v_;
  }

private:
  std::int64_t v_ = 0;
};

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }
inline std::string to_decimal_string(CheckedInt64 v) { return std::to_string(v.value()); }
inline std::string to_decimal_string(std::int64_t v) { return std::to_string(v); }

/// Checked narrowing from the arbitrary-precision default.
template <typename Int>
Int int_cast(const BigInt& v);

template <>
inline BigInt int_cast<BigInt>(const BigInt& v) {
  return v;
}

template <>
inline CheckedInt64 int_cast<CheckedInt64>(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
    throw Overflow("value " + v.str() + " does not fit in int64");
  return CheckedInt64(static_cast<std::int64_t>(v));
}

inline BigInt to_bigint(const BigInt& v) { return v; }
inline BigInt to_bigint(CheckedInt64 v) { return BigInt(v.value()); }

}  // namespace cayley
