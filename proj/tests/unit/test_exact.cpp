#include <gtest/gtest.h>

#include <cmath>

#include "adelic/errors.hpp"
#include "adelic/exact.hpp"

using namespace adelic;

TEST(Exact, ParseRational) {
  EXPECT_EQ(parse_rational("7/-2"), Rational(-7, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Exact, FloorOfNegative) {
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
  EXPECT_EQ(floor_of(Rational(5, 2)), 2);
  EXPECT_EQ(floor_of(Rational(-4)), -4);
}

TEST(Exact, Factorize) {
  auto f = factorize(-360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], std::make_pair(std::int64_t{2}, 3));
  EXPECT_EQ(f[2], std::make_pair(std::int64_t{5}, 1));
  EXPECT_EQ(as_prime_power(27)->second, 3);
  EXPECT_FALSE(as_prime_power(12).has_value());
}

TEST(Exact, PosRealExactRoundTrip) {
  auto x = PosRealExact::from_rational(Rational(12, 5));
  EXPECT_EQ(*x.as_rational(), Rational(12, 5));
  auto r = PosRealExact::prime_power(2, Rational(-3, 2));
  EXPECT_FALSE(r.as_rational().has_value());
  EXPECT_NEAR(r.to_double(), std::pow(2.0, -1.5), 1e-15);
  auto [whole, rest] = r.split_integral();
  EXPECT_EQ(whole, Rational(1, 4));
  EXPECT_EQ(rest.exponent_of(2), Rational(1, 2));
  EXPECT_TRUE((r * r.inverse()).is_one());
}

TEST(Exact, LogValueSymbolicCancellation) {
  LogValue a = LogValue::log_rational(Rational(9, 2));
  EXPECT_EQ(a.coefficient_of(3), Rational(2));
  EXPECT_EQ(a.coefficient_of(2), Rational(-1));
  LogValue b = a - LogValue::log_prime(3, Rational(2)) + LogValue::log_prime(2);
  EXPECT_TRUE(b.symbolic().empty());
  EXPECT_TRUE(b.is_exact());
  EXPECT_NEAR(a.to_double(), std::log(4.5), 1e-14);
  EXPECT_TRUE((LogValue::real(0.5) + a).equals(a + LogValue::real(0.5 + 1e-12)));
  EXPECT_FALSE(LogValue::log_prime(2).equals(LogValue::real(std::log(2.0))));
}
