#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace artin {

/// A cycle length that may be infinite (forests have girth infinity).
class ExtendedLength {
 public:
  constexpr ExtendedLength() = default;  // infinite
  static constexpr ExtendedLength infinite() { return {}; }
  static constexpr ExtendedLength finite(int n) {
    ExtendedLength l;
    l.value_ = n;
    return l;
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  int value() const {
    if (!value_) throw std::logic_error("ExtendedLength: value of infinite length");
    return *value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

  friend constexpr bool operator==(const ExtendedLength&, const ExtendedLength&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedLength& a, const ExtendedLength& b) {
    const int x = a.value_.value_or(std::numeric_limits<int>::max());
    const int y = b.value_.value_or(std::numeric_limits<int>::max());
    return x <=> y;
  }

 private:
  std::optional<int> value_;
};

}  // namespace artin
