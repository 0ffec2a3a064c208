#include "bott/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bott {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(std::string_view s) {
  if (s.find('.') != std::string_view::npos)
    throw std::invalid_argument("Rational: decimal literals are not exact; write '" +
                                std::string(s) + "' as a fraction p/q (e.g. 0.5 -> 1/2)");
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
  if (s.find('/', slash + 1) != std::string_view::npos)
    throw std::invalid_argument("Rational: more than one '/' in '" + std::string(s) + "'");
  BigInt n = BigInt::from_string(s.substr(0, slash));
  BigInt d = BigInt::from_string(s.substr(slash + 1));
  if (d.is_zero()) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

} // namespace bott
