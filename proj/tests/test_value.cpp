#include <gtest/gtest.h>

#include "nadd/value.hpp"

using namespace nadd;

TEST(Value, ParsesRationalLiterals) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational(" -2 "), Rational(-2));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1."), ParseError);
    EXPECT_TRUE(Value::parse("inf").is_infinite());
}

TEST(Value, InfinityConventions) {
    Value inf = Value::infinity();
    EXPECT_TRUE((inf + Value(3)).is_infinite());
    EXPECT_TRUE((inf * Value(0)).is_zero());
    EXPECT_TRUE((Value(0) * inf).is_zero());
    EXPECT_TRUE((inf * Value(Rational(1, 2))).is_infinite());
    EXPECT_LT(Value(1000000), inf);
    EXPECT_EQ(inf, Value::infinity());
    EXPECT_EQ(Value(5) / inf, Value(0));
}

TEST(Value, ExactPowersStayRational) {
    EXPECT_EQ(pow(Value(Rational(1, 4)), Rational(1, 2)), Value(Rational(1, 2)));
    EXPECT_EQ(pow(Value(Rational(8, 27)), Rational(2, 3)), Value(Rational(4, 9)));
    EXPECT_EQ(pow(Value(3), Rational(3)), Value(27));
    EXPECT_TRUE(pow(Value::infinity(), Rational(3)).is_infinite());
    EXPECT_TRUE(pow(Value(0), Rational(1, 7)).is_zero());
}

TEST(Value, IrrationalPowersUseTheFloatTier) {
    Value r = pow(Value(Rational(1, 2)), Rational(1, 2));
    EXPECT_FALSE(r.is_exact());
    EXPECT_NEAR(r.to_double(), 0.7071067811865476, 1e-15);
    // The tier-2 value is accurate well past double precision.
    Real err = mp::abs(r.to_real() * r.to_real() - Real(0.5));
    EXPECT_LT(err, Real(1e-25));
}

TEST(Value, FloatComparisonsUseTolerance) {
    Value a = Value::real(Real(1) + Real(1e-14));
    EXPECT_TRUE(approx_equal(a, Value(1)));
    EXPECT_TRUE(approx_le(a, Value(1)));
    EXPECT_FALSE(approx_le(Value::real(Real(1.1)), Value(1)));
    EXPECT_FALSE(approx_equal(Value(1), Value(Rational(1000000000001, 1000000000000))));
}

TEST(Value, Formatting) {
    EXPECT_EQ(Value(Rational(6, 4)).to_string(), "3/2");
    EXPECT_EQ(Value(-2).to_string(), "-2");
    EXPECT_EQ(Value::infinity().to_string(), "inf");
    EXPECT_EQ(pow(Value(2), Rational(1, 2)).to_string(), "1.4142135623730951");
}
