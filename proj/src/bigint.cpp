#include "bott/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace bott {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN by widening through unsigned
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  assert(cmp_mag(a, b) >= 0);
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Shift-subtract long division on magnitudes; q and r are outputs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
  assert(!b.empty());
  q.clear();
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    // single-limb fast path
    q.assign(a.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<std::uint32_t>(cur / b[0]);
      rem = cur % b[0];
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }
  // bit-by-bit from the most significant bit of a
  q.assign(a.size(), 0);
  for (std::size_t bit = a.size() * 32; bit-- > 0;) {
    // r = (r << 1) | a_bit
    std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint32_t next = r[i] >> 31;
      r[i] = (r[i] << 1) | carry;
      carry = next;
    }
    if (carry) r.push_back(carry);
    if (cmp_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[bit / 32] |= (1u << (bit % 32));
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  int sign = 1;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  if (pos == s.size()) throw std::invalid_argument("BigInt: no digits in '" + std::string(s) + "'");
  BigInt out;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigInt: invalid digit in '" + std::string(s) + "'");
    out = out * BigInt(10) + BigInt(c - '0');
  }
  if (sign < 0 && !out.is_zero()) out.sign_ = -1;
  return out;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  const std::vector<std::uint32_t> ten = {10u};
  while (!mag.empty()) {
    std::vector<std::uint32_t> q, r;
    divmod_mag(mag, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
    mag = std::move(q);
  }
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return sign_ > 0 ? mag <= 0x7fffffffffffffffull : mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  std::uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  return sign_ < 0 ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    out.sign_ = a.sign_;
  } else {
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
      out.sign_ = a.sign_;
    } else {
      out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
      out.sign_ = b.sign_;
    }
  }
  out.normalize();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  out.sign_ = a.sign_ * b.sign_;
  out.normalize();
  return out;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  BigInt out;
  std::vector<std::uint32_t> r;
  BigInt::divmod_mag(a.limbs_, b.limbs_, out.limbs_, r);
  out.sign_ = a.sign_ * b.sign_;
  out.normalize();
  return out;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: modulo by zero");
  BigInt out;
  std::vector<std::uint32_t> q;
  BigInt::divmod_mag(a.limbs_, b.limbs_, q, out.limbs_);
  out.sign_ = a.sign_; // remainder carries the dividend's sign
  out.normalize();
  return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

} // namespace bott
