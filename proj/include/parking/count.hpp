// Arbitrary-precision counts and the exact-to-float bridge.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace parking {

/// Signed exact integer used for intermediate alternating sums.
using SignedCount = mpz_class;

/// A nonnegative arbitrary-precision integer.
///
/// Every enumeration result (cp, S, a, n^m) is a Count. The nonnegativity
/// invariant is enforced on construction and on subtraction.
class Count {
public:
  Count() = default;
  Count(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT
  explicit Count(const SignedCount& v);
  explicit Count(SignedCount&& v);

  static Count from_string(std::string_view decimal);
  std::string to_string() const { return value_.get_str(10); }

  const SignedCount& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  std::size_t bit_length() const;

  Count& operator+=(const Count& o) {
    value_ += o.value_;
    return *this;
  }
  Count& operator*=(const Count& o) {
    value_ *= o.value_;
    return *this;
  }
  /// Throws std::domain_error if the result would be negative.
  Count& operator-=(const Count& o);

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }

  friend bool operator==(const Count& a, const Count& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  SignedCount value_{0};
};

/// base^exp with 0^0 = 1.
SignedCount ipow(const SignedCount& base, unsigned long exp);
Count ipow(std::uint64_t base, std::uint64_t exp);

/// num/den rounded to double without converting either operand to a float.
///
/// The quotient is formed on a 128-bit significand window (shift the smaller
/// operand by the bit-length difference plus 128, then divide), so the result
/// stays accurate when num and den are far outside double's exponent range.
/// den must be positive.
double ratio_to_double(const SignedCount& num, const SignedCount& den);
inline double ratio_to_double(const Count& num, const Count& den) {
  return ratio_to_double(num.value(), den.value());
}

}  // namespace parking
