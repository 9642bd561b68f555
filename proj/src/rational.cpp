#include "roldarp/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace roldarp {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by widening before negation.
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  std::uint64_t v = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= 0x7fffffffffffffffull;
  return v <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_int64() const {
  std::uint64_t v = 0;
  if (!mag_.empty()) v = mag_[0];
  if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
  return sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
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
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[big.size()] = static_cast<std::uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (s < 0) {
      s += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && b.size() == 1) {
    std::uint64_t p = static_cast<std::uint64_t>(a[0]) * b[0];
    std::vector<std::uint32_t> out{static_cast<std::uint32_t>(p & 0xffffffffu)};
    if (p >> 32) out.push_back(static_cast<std::uint32_t>(p >> 32));
    return out;
  }
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + carry + static_cast<std::uint64_t>(a[i]) * b[j];
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out[i + b.size()] += static_cast<std::uint32_t>(carry);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Schoolbook binary long division on magnitudes; adequate for the small
// operand sizes this library sees.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  q.clear();
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (a.size() <= 2 && b.size() <= 2) {
    std::uint64_t av = a[0] | (a.size() > 1 ? static_cast<std::uint64_t>(a[1]) << 32 : 0);
    std::uint64_t bv = b[0] | (b.size() > 1 ? static_cast<std::uint64_t>(b[1]) << 32 : 0);
    std::uint64_t qv = av / bv, rv = av % bv;
    if (qv) {
      q.push_back(static_cast<std::uint32_t>(qv & 0xffffffffu));
      if (qv >> 32) q.push_back(static_cast<std::uint32_t>(qv >> 32));
    }
    if (rv) {
      r.push_back(static_cast<std::uint32_t>(rv & 0xffffffffu));
      if (rv >> 32) r.push_back(static_cast<std::uint32_t>(rv >> 32));
    }
    return;
  }
  q.assign(a.size(), 0);
  std::vector<std::uint32_t> rem;
  for (std::size_t bit = a.size() * 32; bit-- > 0;) {
    // rem = rem*2 + bit(a, bit)
    std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      std::uint32_t next = rem[i] >> 31;
      rem[i] = (rem[i] << 1) | carry;
      carry = next;
    }
    if (carry) rem.push_back(carry);
    if (cmp_mag(rem, b) >= 0) {
      rem = sub_mag(rem, b);
      q[bit / 32] |= 1u << (bit % 32);
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r = std::move(rem);
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
    out.sign_ = a.sign_;
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q = BigInt();
  r = BigInt();
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
    std::uint64_t x = a.mag_[0] | (a.mag_.size() > 1 ? static_cast<std::uint64_t>(a.mag_[1]) << 32 : 0);
    std::uint64_t y = b.mag_[0] | (b.mag_.size() > 1 ? static_cast<std::uint64_t>(b.mag_[1]) << 32 : 0);
    while (y) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    BigInt out;
    out.sign_ = 1;
    out.mag_.push_back(static_cast<std::uint32_t>(x & 0xffffffffu));
    if (x >> 32) out.mag_.push_back(static_cast<std::uint32_t>(x >> 32));
    out.trim();
    return out;
  }
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt t = x % y;
    x = y;
    y = t;
  }
  return x;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
  return c <=> 0;
}

BigInt BigInt::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt out;
  const BigInt chunk_base(1000000000ll);
  while (pos < text.size()) {
    std::size_t take = std::min<std::size_t>(9, text.size() - pos);
    std::uint64_t chunk = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      char ch = text[pos + i];
      if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: bad digit");
      chunk = chunk * 10 + static_cast<std::uint64_t>(ch - '0');
      scale *= 10;
    }
    out = out * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(chunk));
    pos += take;
  }
  if (neg && !out.is_zero()) out.sign_ = -1;
  return out;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt v = abs();
  const BigInt chunk_base(1000000000ll);
  while (!v.is_zero()) {
    BigInt q, r;
    divmod(v, chunk_base, q, r);
    std::uint64_t limb = r.is_zero() ? 0 : r.to_int64();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + limb % 10));
      limb /= 10;
    }
    v = q;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = out.num_.abs();
  return out;
}

BigInt Rational::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (r.sign() < 0) q = q - BigInt(1);
  return q;
}

BigInt Rational::ceil() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (r.sign() > 0) q = q + BigInt(1);
  return q;
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

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(text), BigInt(1));
  return Rational(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

const Rational& Rational::zero() {
  static const Rational v(0);
  return v;
}

const Rational& Rational::one() {
  static const Rational v(1);
  return v;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace roldarp
