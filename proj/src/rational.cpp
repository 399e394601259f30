#include "interdict/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace interdict {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
constexpr std::uint32_t kDecChunkBase = 1'000'000'000u;  // 10^9
constexpr int kDecChunkDigits = 9;
}  // namespace

BigInt::BigInt(std::int64_t v) {
  neg_ = v < 0;
  std::uint64_t mag = neg_ ? 0 - static_cast<std::uint64_t>(v)
                           : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  if (limbs_.empty()) neg_ = false;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::compare_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b, bool neg) {
  BigInt r;
  const auto& x = a.limbs_;
  const auto& y = b.limbs_;
  const std::size_t n = std::max(x.size(), y.size());
  r.limbs_.resize(n);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  r.neg_ = neg;
  r.trim();
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b, bool neg) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size()
                          ? static_cast<std::int64_t>(b.limbs_[i])
                          : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  r.neg_ = neg;
  r.trim();
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.neg_ = !r.neg_;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.neg_ == b.neg_) return BigInt::add_mag(a, b, a.neg_);
  int c = BigInt::compare_mag(a, b);
  if (c == 0) return BigInt{};
  return c > 0 ? BigInt::sub_mag(a, b, a.neg_) : BigInt::sub_mag(b, a, b.neg_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt{};
  BigInt r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] +
                          static_cast<std::uint64_t>(a.limbs_[i]) *
                              b.limbs_[j] +
                          carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.neg_ = a.neg_ != b.neg_;
  r.trim();
  return r;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::size_t top = 32 - static_cast<std::size_t>(__builtin_clz(limbs_.back()));
  return (limbs_.size() - 1) * 32 + top;
}

BigInt BigInt::shifted_left(std::size_t bits) const {
  if (is_zero() || bits == 0) return *this;
  const std::size_t limb_shift = bits / 32;
  const std::size_t bit_shift = bits % 32;
  BigInt r;
  r.neg_ = neg_;
  r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v & 0xffffffffu);
    r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  r.trim();
  return r;
}

BigInt BigInt::shifted_right(std::size_t bits) const {
  const std::size_t limb_shift = bits / 32;
  if (limb_shift >= limbs_.size()) return BigInt{};
  const std::size_t bit_shift = bits % 32;
  BigInt r;
  r.neg_ = neg_;
  r.limbs_.assign(limbs_.size() - limb_shift, 0);
  for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
    std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
      v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1])
           << (32 - bit_shift);
    r.limbs_[i] = static_cast<std::uint32_t>(v);
  }
  r.trim();
  return r;
}

std::size_t BigInt::trailing_zero_bits() const {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0)
      return i * 32 + static_cast<std::size_t>(__builtin_ctz(limbs_[i]));
  }
  return 0;
}

void BigInt::divmod_mag(const BigInt& a, const BigInt& d, BigInt& q,
                        BigInt& r) {
  if (compare_mag(a, d) < 0) {
    q = BigInt{};
    r = a;
    r.neg_ = false;
    return;
  }
  if (d.limbs_.size() == 1) {
    q = a;
    q.neg_ = false;
    std::uint32_t rem = q.divmod_small(d.limbs_[0]);
    r = BigInt{static_cast<std::int64_t>(rem)};
    return;
  }
  // Bit-at-a-time long division; magnitudes only.
  BigInt rem;
  BigInt quo;
  quo.limbs_.assign(a.limbs_.size(), 0);
  BigInt dd = d;
  dd.neg_ = false;
  for (std::size_t bit = a.bit_length(); bit-- > 0;) {
    rem = rem.shifted_left(1);
    if ((a.limbs_[bit / 32] >> (bit % 32)) & 1u) {
      if (rem.limbs_.empty())
        rem.limbs_.push_back(1);
      else
        rem.limbs_[0] |= 1u;
    }
    if (compare_mag(rem, dd) >= 0) {
      rem = sub_mag(rem, dd, false);
      quo.limbs_[bit / 32] |= (1u << (bit % 32));
    }
  }
  quo.trim();
  rem.trim();
  q = std::move(quo);
  r = std::move(rem);
}

void BigInt::divmod(const BigInt& a, const BigInt& d, BigInt& q, BigInt& r) {
  if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt qq, rr;
  divmod_mag(a, d, qq, rr);
  qq.neg_ = !qq.limbs_.empty() && (a.neg_ != d.neg_);
  rr.neg_ = !rr.limbs_.empty() && a.neg_;
  q = std::move(qq);
  r = std::move(rr);
}

BigInt BigInt::operator/(const BigInt& d) const {
  BigInt q, r;
  divmod(*this, d, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& d) const {
  BigInt q, r;
  divmod(*this, d, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs();
  BigInt y = b.abs();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const std::size_t xz = x.trailing_zero_bits();
  const std::size_t yz = y.trailing_zero_bits();
  const std::size_t shift = std::min(xz, yz);
  x = x.shifted_right(xz);
  for (;;) {
    y = y.shifted_right(y.trailing_zero_bits());
    if (compare_mag(x, y) > 0) std::swap(x, y);
    y = sub_mag(y, x, false);
    if (y.is_zero()) break;
  }
  return x.shifted_left(shift);
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  const int sa = sign();
  const int sb = o.sign();
  if (sa != sb) return sa <=> sb;
  int c = compare_mag(*this, o);
  if (sa < 0) c = -c;
  return c <=> 0;
}

bool BigInt::operator==(const BigInt& o) const {
  return neg_ == o.neg_ && limbs_ == o.limbs_;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    mag = (mag << 32) | limbs_[i];
  if (neg_) return mag <= (std::uint64_t{1} << 63);
  return mag <= static_cast<std::uint64_t>(
                    std::numeric_limits<std::int64_t>::max());
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: out of int64 range");
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    mag = (mag << 32) | limbs_[i];
  return neg_ ? static_cast<std::int64_t>(0 - mag)
              : static_cast<std::int64_t>(mag);
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
  return neg_ ? -v : v;
}

void BigInt::mul_small_add(std::uint32_t mul, std::uint32_t add) {
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
    limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

BigInt BigInt::from_string(std::string_view s) {
  bool neg = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size())
    throw std::invalid_argument("BigInt: empty numeric string");
  BigInt r;
  while (pos < s.size()) {
    const std::size_t take = std::min<std::size_t>(kDecChunkDigits,
                                                   s.size() - pos);
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      const char c = s[pos + i];
      if (c < '0' || c > '9')
        throw std::invalid_argument("BigInt: invalid digit in numeric string");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    r.mul_small_add(scale, chunk);
    pos += take;
  }
  r.neg_ = neg && !r.limbs_.empty();
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt t = *this;
  t.neg_ = false;
  std::vector<std::uint32_t> chunks;
  while (!t.is_zero()) chunks.push_back(t.divmod_small(kDecChunkBase));
  std::string out;
  if (neg_) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : num_(num), den_(den) {
  normalize();
}

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt{1};
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g == BigInt{1}) return;
  BigInt q, r;
  BigInt::divmod(num_, g, q, r);
  num_ = std::move(q);
  BigInt::divmod(den_, g, q, r);
  den_ = std::move(q);
}

Rational Rational::from_string(std::string_view s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational{BigInt::from_string(s), BigInt{1}};
  return Rational{BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1))};
}

bool Rational::is_integer() const { return den_ == BigInt{1}; }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational{a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational{a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational{a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num_ * o.den_ <=> o.num_ * den_;
}

bool Rational::operator==(const Rational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

BigInt Rational::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (r.is_negative()) q -= BigInt{1};
  return q;
}

BigInt Rational::ceil() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (!r.is_zero() && !r.is_negative()) q += BigInt{1};
  return q;
}

double Rational::to_double() const {
  return num_.to_double() / den_.to_double();
}

std::string Rational::to_string() const {
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace interdict
