#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace statecount {

/// Arbitrary-precision nonnegative integer. Every count in the project is one.
///
/// Only the operations the counting pipeline needs are exposed: addition,
/// multiplication and comparison. There is no subtraction, so a value can
/// never go negative.
class ExactCount {
 public:
  using Rep = boost::multiprecision::cpp_int;

  ExactCount() = default;
  ExactCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Wraps a raw integer; throws std::domain_error if it is negative.
  static ExactCount from_rep(Rep v);

  /// Parses a canonical decimal string (digits only, no sign, no grouping).
  /// Throws std::invalid_argument on anything else.
  static ExactCount parse(std::string_view text);

  std::string to_string() const;
  std::size_t digits() const { return to_string().size(); }
  bool is_zero() const { return value_.is_zero(); }

  const Rep& rep() const { return value_; }

  ExactCount& operator+=(const ExactCount& o) {
    value_ += o.value_;
    return *this;
  }
  ExactCount& operator*=(const ExactCount& o) {
    value_ *= o.value_;
    return *this;
  }

  friend ExactCount operator+(ExactCount a, const ExactCount& b) { return a += b; }
  friend ExactCount operator*(ExactCount a, const ExactCount& b) { return a *= b; }

  friend bool operator==(const ExactCount& a, const ExactCount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactCount& a, const ExactCount& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rep value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactCount& c);

}  // namespace statecount
