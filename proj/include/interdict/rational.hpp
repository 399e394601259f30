#ifndef INTERDICT_RATIONAL_HPP
#define INTERDICT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace interdict {

/// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
/// Canonical form: no leading zero limbs, zero is the empty limb vector with
/// positive sign.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on empty or non-numeric input.
  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }
  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }
  BigInt abs() const;

  BigInt operator-() const;
  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  /// Truncated division: q rounds toward zero, remainder carries the sign of
  /// the dividend, |r| < |d|. Throws std::domain_error when d is zero.
  static void divmod(const BigInt& a, const BigInt& d, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& d) const;
  BigInt operator%(const BigInt& d) const;

  /// Greatest common divisor of magnitudes; result is non-negative.
  static BigInt gcd(const BigInt& a, const BigInt& b);

  std::strong_ordering operator<=>(const BigInt& o) const;
  bool operator==(const BigInt& o) const;

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error if out of range
  double to_double() const;       // may overflow to +/-inf for huge values

  BigInt shifted_left(std::size_t bits) const;
  BigInt shifted_right(std::size_t bits) const;
  std::size_t bit_length() const;

 private:
  bool neg_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian

  void trim();
  static int compare_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b, bool neg);
  // requires |a| >= |b|
  static BigInt sub_mag(const BigInt& a, const BigInt& b, bool neg);
  static void divmod_mag(const BigInt& a, const BigInt& d, BigInt& q,
                         BigInt& r);
  std::size_t trailing_zero_bits() const;
  void mul_small_add(std::uint32_t mul, std::uint32_t add);
  std::uint32_t divmod_small(std::uint32_t d);  // in place, returns remainder
};

/// Exact rational number. Stored reduced with a strictly positive
/// denominator; comparisons are exact cross-multiplications.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);
  Rational(BigInt num, BigInt den);

  /// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
  /// and std::domain_error on a zero denominator.
  static Rational from_string(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const;
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const;

  BigInt floor() const;
  BigInt ceil() const;

  double to_double() const;
  std::string to_string() const;  // always "num/den"

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

inline Rational min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace interdict

#endif  // INTERDICT_RATIONAL_HPP
