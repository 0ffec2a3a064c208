#ifndef BOTT_BIGINT_HPP
#define BOTT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <iosfwd>

namespace bott {

/// Signed arbitrary-precision integer, sign-magnitude with 32-bit limbs.
///
/// Magnitudes in this project stay small (a few limbs), so the simple
/// schoolbook algorithms below are more than fast enough and easy to audit.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on anything that is not ^[+-]?[0-9]+$.
  static BigInt from_string(std::string_view s);

  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int signum() const { return sign_; }

  /// True when the value fits in a signed 64-bit integer.
  bool fits_int64() const;
  long long to_int64() const; // precondition: fits_int64()

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Truncated division (C semantics: quotient rounds toward zero).
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }
  BigInt& operator/=(const BigInt& b) { return *this = *this / b; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  static BigInt gcd(BigInt a, BigInt b); // always >= 0

private:
  // limbs_ little-endian, no trailing zero limbs; sign_ == 0 iff limbs_ empty
  std::vector<std::uint32_t> limbs_;
  int sign_ = 0;

  void normalize();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  // precondition: |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

} // namespace bott

#endif
