#ifndef BOTT_RATIONAL_HPP
#define BOTT_RATIONAL_HPP

#include "bott/bigint.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace bott {

/// Exact rational number. Always kept in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
///
/// This is the scalar of every computation in the library; no operation
/// on it ever rounds.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}
  Rational(BigInt n, BigInt d);

  /// Parses "p/q" or "p" (decimal integers). q = 0 and anything malformed
  /// throw std::invalid_argument; decimal-point literals are rejected with a
  /// hint to use a fraction instead.
  static Rational from_string(std::string_view s);

  /// Canonical serialization: "p/q" when q != 1, else "p". Round-trips
  /// bit-exactly through from_string.
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int signum() const { return num_.signum(); }

  Rational operator-() const;
  Rational inverse() const; // throws std::domain_error on zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
  BigInt num_;
  BigInt den_; // > 0
  void reduce();
};

inline Rational abs(const Rational& r) { return r.signum() < 0 ? -r : r; }

} // namespace bott

#endif
