#include "dmcc/decimal.hpp"

#include <gtest/gtest.h>

#include <random>

using dmcc::Decimal;

namespace {

Decimal d(const char* s) { return Decimal::parse(s).value(); }

}  // namespace

TEST(Decimal, ParsesIntegerAndFractionalForms) {
  EXPECT_EQ(d("250").scaled(), 2'500'000);
  EXPECT_EQ(d("0.00").scaled(), 0);
  EXPECT_EQ(d("99.99").scaled(), 999'900);
  EXPECT_EQ(d("-1.5").scaled(), -15'000);
  EXPECT_EQ(d(".5").scaled(), 5'000);
  EXPECT_EQ(d("+3").scaled(), 30'000);
  EXPECT_EQ(d("1.234500").scaled(), 12'345);
}

TEST(Decimal, RejectsMalformedOrTooPrecise) {
  EXPECT_FALSE(Decimal::parse(""));
  EXPECT_FALSE(Decimal::parse("abc"));
  EXPECT_FALSE(Decimal::parse("1."));
  EXPECT_FALSE(Decimal::parse("1e3"));
  EXPECT_FALSE(Decimal::parse("-"));
  EXPECT_FALSE(Decimal::parse("0.00001"));
  EXPECT_FALSE(Decimal::parse("99999999999999999999"));
}

TEST(Decimal, CanonicalStringDropsTrailingZeros) {
  EXPECT_EQ(d("99.00").to_string(), "99");
  EXPECT_EQ(d("99.99").to_string(), "99.99");
  EXPECT_EQ(d("0.10").to_string(), "0.1");
  EXPECT_EQ(d("-0.0").to_string(), "0");
  EXPECT_EQ(d("-3.0125").to_string(), "-3.0125");
}

TEST(Decimal, PresentationRoundsHalfEven) {
  EXPECT_EQ(d("2.345").to_fixed(2), "2.34");
  EXPECT_EQ(d("2.355").to_fixed(2), "2.36");
  EXPECT_EQ(d("2.3451").to_fixed(2), "2.35");
  EXPECT_EQ(d("-2.345").to_fixed(2), "-2.34");
  EXPECT_EQ(d("5").to_fixed(2), "5.00");
  EXPECT_EQ(d("0.005").to_fixed(2), "0.00");
  EXPECT_EQ(d("0.015").to_fixed(2), "0.02");
}

TEST(Decimal, ArithmeticIsExactOnScaledIntegers) {
  EXPECT_EQ(d("50") * d("0.10"), d("5"));
  EXPECT_EQ(d("10") * d("0.28") + d("5") * d("0.02"), d("2.90"));
  EXPECT_EQ(d("200") * d("0.25"), d("50"));
  EXPECT_EQ(d("0.0001") * d("0.5"), d("0"));  // 0.00005 rounds to even
  EXPECT_EQ(d("0.0003") * d("0.5"), d("0.0002"));
}

TEST(Decimal, MultiplicationMatchesIntegerOracle) {
  // Quantities with two fractional digits times prices with two fractional
  // digits need at most four: the product must be exact.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> cents(0, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t a = cents(rng);
    const std::int64_t b = cents(rng);
    const Decimal x = Decimal::from_scaled(a * 100);
    const Decimal y = Decimal::from_scaled(b * 100);
    EXPECT_EQ((x * y).scaled(), a * b);
  }
}

TEST(Decimal, OverflowThrows) {
  const Decimal big = Decimal::from_scaled(INT64_MAX);
  EXPECT_THROW(big + Decimal::from_integer(1), std::overflow_error);
  EXPECT_THROW(big * Decimal::from_integer(2), std::overflow_error);
}

TEST(Decimal, LexicalComparisonHandlesArbitraryLength) {
  using std::strong_ordering;
  EXPECT_EQ(dmcc::compare_decimal_lexical("1", "01.000"), strong_ordering::equal);
  EXPECT_EQ(dmcc::compare_decimal_lexical("0.5", "0.49"), strong_ordering::greater);
  EXPECT_EQ(dmcc::compare_decimal_lexical("-2", "-10"), strong_ordering::greater);
  EXPECT_EQ(dmcc::compare_decimal_lexical("-0.0", "0"), strong_ordering::equal);
  EXPECT_EQ(dmcc::compare_decimal_lexical("123456789012345678901234567890", "99"), strong_ordering::greater);
  EXPECT_FALSE(dmcc::compare_decimal_lexical("1e5", "1"));
  EXPECT_FALSE(dmcc::compare_decimal_lexical("abc", "1"));
}
