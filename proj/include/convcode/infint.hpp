#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace convcode {

/// A nonnegative integer or +infinity. Infinity absorbs addition and
/// compares above every finite value.
class InfInt {
 public:
  constexpr InfInt() = default;  // infinity
  constexpr InfInt(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr InfInt inf() { return InfInt{}; }

  constexpr bool is_inf() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// Precondition: finite.
  constexpr std::uint64_t value() const { return *value_; }

  constexpr InfInt operator+(const InfInt& o) const {
    if (is_inf() || o.is_inf()) return inf();
    return InfInt{*value_ + *o.value_};
  }
  InfInt& operator+=(const InfInt& o) { return *this = *this + o; }

  constexpr bool operator==(const InfInt& o) const { return value_ == o.value_; }
  constexpr std::strong_ordering operator<=>(const InfInt& o) const {
    if (is_inf() && o.is_inf()) return std::strong_ordering::equal;
    if (is_inf()) return std::strong_ordering::greater;
    if (o.is_inf()) return std::strong_ordering::less;
    return *value_ <=> *o.value_;
  }

  std::string to_string() const { return is_inf() ? "inf" : std::to_string(*value_); }

 private:
  std::optional<std::uint64_t> value_;
};

inline std::ostream& operator<<(std::ostream& os, const InfInt& v) { return os << v.to_string(); }

}  // namespace convcode
