#include <gtest/gtest.h>

#include <stdexcept>

#include "homdil/rational.hpp"

using homdil::make_rational;
using homdil::parse_rational;
using homdil::Rational;

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(homdil::to_string(r), "-3/2");
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(parse_rational("2/4"), make_rational(1, 2));
  EXPECT_EQ(parse_rational(" -10/15 "), make_rational(-2, 3));
  EXPECT_EQ(homdil::to_string(parse_rational("4/2")), "2");
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, ExactArithmetic) {
  Rational sum = 0;
  for (long k = 1; k <= 20; ++k) sum += make_rational(1, k * (k + 1));
  EXPECT_EQ(sum, make_rational(20, 21));
  EXPECT_TRUE(homdil::is_zero(sum - make_rational(20, 21)));
}

TEST(Rational, BigValuesRoundTrip) {
  const Rational big = parse_rational("123456789012345678901234567891/7");
  EXPECT_EQ(homdil::to_string(big), "123456789012345678901234567891/7");
  EXPECT_EQ(parse_rational(homdil::to_string(big * big)), big * big);
}
