#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "interdict/rational.hpp"
#include "interdict/rng.hpp"

using interdict::BigInt;
using interdict::Rational;
using interdict::SplitMix64;

TEST_CASE("fraction identities") {
  CHECK(Rational{1, 2} + Rational{1, 3} == Rational{5, 6});
  CHECK(Rational{4, 6} == Rational{2, 3});
  CHECK(Rational{4, 6}.num() == BigInt{2});
  CHECK(Rational{4, 6}.den() == BigInt{3});
  CHECK((Rational{7, 3} <=> Rational{21, 9}) == std::strong_ordering::equal);
}

TEST_CASE("normalization and sign") {
  CHECK(Rational{1, -2} == Rational{-1, 2});
  CHECK(Rational{-4, -6} == Rational{2, 3});
  CHECK(Rational{0, 5}.den() == BigInt{1});
  CHECK(Rational{-3, 7}.is_negative());
  CHECK(Rational{3, 7}.sign() == 1);
  CHECK(Rational{0}.sign() == 0);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS((Rational{1, 2} / Rational{0}), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS((BigInt{1} / BigInt{0}), std::domain_error);
}

TEST_CASE("floor and ceil") {
  CHECK(Rational{7, 2}.floor() == BigInt{3});
  CHECK(Rational{7, 2}.ceil() == BigInt{4});
  CHECK(Rational{-7, 2}.floor() == BigInt{-4});
  CHECK(Rational{-7, 2}.ceil() == BigInt{-3});
  CHECK(Rational{6, 3}.floor() == BigInt{2});
  CHECK(Rational{6, 3}.ceil() == BigInt{2});
}

TEST_CASE("string round trips") {
  CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK(BigInt::from_string("-000123").to_string() == "-123");
  CHECK(BigInt::from_string("0").to_string() == "0");
  CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
  CHECK(Rational::from_string("2").to_string() == "2/1");
  CHECK(Rational::from_string("-6/4").to_string() == "-3/2");
}

TEST_CASE("int64 bounds") {
  const std::int64_t lo = std::numeric_limits<std::int64_t>::min();
  const std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  CHECK(BigInt{lo}.to_int64() == lo);
  CHECK(BigInt{hi}.to_int64() == hi);
  CHECK(!(BigInt{hi} + BigInt{1}).fits_int64());
  CHECK((BigInt{lo}).fits_int64());
  CHECK(!(BigInt{lo} - BigInt{1}).fits_int64());
  CHECK_THROWS_AS((BigInt{hi} * BigInt{2}).to_int64(), std::overflow_error);
}

namespace {

std::int64_t sample_small(SplitMix64& rng) {
  return static_cast<std::int64_t>(rng.below(2'000'001)) - 1'000'000;
}

}  // namespace

TEST_CASE("BigInt arithmetic agrees with int128 on random operands") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t a = sample_small(rng) * sample_small(rng);
    const std::int64_t b = sample_small(rng) * sample_small(rng);
    const BigInt ba{a}, bb{b};
    CHECK((ba + bb).to_int64() == a + b);
    CHECK((ba - bb).to_int64() == a - b);
    const __int128 prod = static_cast<__int128>(a) * b;
    const BigInt bp = ba * bb;
    CHECK(bp.to_double() == doctest::Approx(static_cast<double>(prod)));
    if (b != 0) {
      BigInt q, r;
      BigInt::divmod(ba, bb, q, r);
      CHECK(q.to_int64() == a / b);
      CHECK(r.to_int64() == a % b);
      CHECK(q * bb + r == ba);
    }
    CHECK((ba <=> bb) == (a <=> b));
  }
}

TEST_CASE("BigInt divmod invariants on wide operands") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    BigInt a{static_cast<std::int64_t>(rng.next())};
    a = a * BigInt{static_cast<std::int64_t>(rng.next() >> 1)};
    a = a * BigInt{sample_small(rng)};
    BigInt d{sample_small(rng)};
    if (trial % 3 == 0) d = d * BigInt{static_cast<std::int64_t>(rng.next() >> 40) + 2};
    if (d.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, d, q, r);
    CHECK(q * d + r == a);
    CHECK(r.abs() < d.abs());
    if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
  }
}

TEST_CASE("BigInt gcd agrees with std::gcd") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t a = sample_small(rng);
    const std::int64_t b = sample_small(rng);
    CHECK(BigInt::gcd(BigInt{a}, BigInt{b}).to_int64() ==
          std::gcd(a, b));
  }
}

TEST_CASE("rational field identities on random values") {
  SplitMix64 rng(99);
  auto sample = [&rng] {
    const std::int64_t num = static_cast<std::int64_t>(rng.below(2001)) - 1000;
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(1000));
    return Rational{num, den};
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = sample(), b = sample(), c = sample();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("total order is consistent with double conversion") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t n1 = static_cast<std::int64_t>(rng.below(201)) - 100;
    const std::int64_t n2 = static_cast<std::int64_t>(rng.below(201)) - 100;
    const std::int64_t d1 = 1 + static_cast<std::int64_t>(rng.below(100));
    const std::int64_t d2 = 1 + static_cast<std::int64_t>(rng.below(100));
    const Rational a{n1, d1}, b{n2, d2};
    const double da = a.to_double(), db = b.to_double();
    if (da < db) CHECK(a < b);
    if (da > db) CHECK(a > b);
    CHECK(((a < b) || (a == b) || (a > b)));
  }
}
