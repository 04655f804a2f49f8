#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace weylsb {

/// An integer or -infinity. Used for delta(0) and ord^T(0).
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;  // -infinity
  constexpr ExtendedInt(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedInt neg_infinity() { return {}; }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_infinity() const { return !finite_; }
  /// Precondition: is_finite().
  constexpr std::int64_t value() const { return value_; }

  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return (a <=> b) == 0;
  }

  /// -inf absorbs.
  friend constexpr ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (!a.finite_ || !b.finite_) return {};
    return a.value_ + b.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtendedInt& v);

}  // namespace weylsb
