#include "qcalc/scalar.hpp"

#include <gtest/gtest.h>

#include "qcalc/sampling.hpp"
#include "testutil.hpp"

using namespace qcalc;
using qcalc::testing::rat;

TEST(Scalar, KindsAndAccessors) {
    EXPECT_EQ(Scalar(rat(1, 2)).kind(), ScalarKind::exact);
    EXPECT_EQ(Scalar(0.5).kind(), ScalarKind::real);
    EXPECT_EQ(Scalar(Complex(0, 1)).kind(), ScalarKind::cplx);
    EXPECT_TRUE(Scalar(rat(1, 2)).is_exact());
    EXPECT_DOUBLE_EQ(Scalar(rat(1, 4)).as_real(), 0.25);
    EXPECT_EQ(Scalar(2.0).as_complex(), Complex(2.0, 0.0));
    EXPECT_THROW(Scalar(Complex(1, 1)).as_real(), std::domain_error);
}

TEST(Scalar, PromotionClimbsAndNeverDescends) {
    const Scalar exact = rat(1, 2);
    const Scalar real = 0.25;
    const Scalar cplx = Complex(0.0, 1.0);

    EXPECT_EQ((exact + exact).kind(), ScalarKind::exact);
    EXPECT_EQ((exact + exact), Scalar(rat(1)));
    EXPECT_EQ((exact + real).kind(), ScalarKind::real);
    EXPECT_DOUBLE_EQ((exact + real).as_real(), 0.75);
    EXPECT_EQ((real + exact).kind(), ScalarKind::real);
    EXPECT_EQ((real + cplx).kind(), ScalarKind::cplx);
    EXPECT_EQ((exact * cplx).kind(), ScalarKind::cplx);
    EXPECT_EQ((cplx * cplx).kind(), ScalarKind::cplx);
    EXPECT_EQ(cplx * cplx, Scalar(Complex(-1.0, 0.0)));
}

TEST(Scalar, ExactArithmeticIsExact) {
    SampleRng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational a = rng.rational(50, 20);
        const Rational b = rng.nonzero_rational(50, 20);
        EXPECT_EQ((Scalar(a) / Scalar(b)).rational(), a / b);
        EXPECT_EQ((Scalar(a) * Scalar(b) + Scalar(b)).rational(), a * b + b);
    }
    EXPECT_THROW(Scalar(rat(1)) / Scalar(rat(0)), std::domain_error);
}

TEST(Scalar, CanonicalRationalInvariants) {
    SampleRng rng(72);
    for (int trial = 0; trial < 60; ++trial) {
        const Rational a = rng.rational(60, 30);
        const Rational b = rng.nonzero_rational(60, 30);
        const Rational value = (Scalar(a) / Scalar(b)).rational();
        // lowest terms, positive denominator
        EXPECT_GT(denominator(value), 0);
        EXPECT_EQ(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(numerator(value))),
                                             BigInt(denominator(value))),
                  BigInt(1));
    }
}

TEST(ScalarParse, RationalAndDecimalForms) {
    EXPECT_EQ(parse_scalar("3/7")->rational(), rat(3, 7));
    EXPECT_EQ(parse_scalar("-5/3")->rational(), rat(-5, 3));
    EXPECT_EQ(parse_scalar("0.25")->rational(), rat(1, 4));
    EXPECT_EQ(parse_scalar("-1.5")->rational(), rat(-3, 2));
    EXPECT_EQ(parse_scalar("1e-3")->rational(), rat(1, 1000));
    EXPECT_EQ(parse_scalar("12")->rational(), rat(12));
    EXPECT_FALSE(parse_scalar("1/0").has_value());
    EXPECT_FALSE(parse_scalar("abc").has_value());
    EXPECT_FALSE(parse_scalar("1..2").has_value());
    EXPECT_FALSE(parse_scalar("").has_value());
}

TEST(ScalarParse, ComplexForms) {
    EXPECT_EQ(parse_scalar("i")->as_complex(), Complex(0, 1));
    EXPECT_EQ(parse_scalar("-i")->as_complex(), Complex(0, -1));
    EXPECT_EQ(parse_scalar("i/2")->as_complex(), Complex(0, 0.5));
    EXPECT_EQ(parse_scalar("0.5i")->as_complex(), Complex(0, 0.5));
    EXPECT_EQ(parse_scalar("1/2i")->as_complex(), Complex(0, 0.5));
    EXPECT_EQ(parse_scalar("1+2i")->as_complex(), Complex(1, 2));
    EXPECT_EQ(parse_scalar("-1-2i")->as_complex(), Complex(-1, -2));
    EXPECT_EQ(parse_scalar("0.5-0.25i")->as_complex(), Complex(0.5, -0.25));
    EXPECT_EQ(parse_scalar("2+i")->as_complex(), Complex(2, 1));
    EXPECT_FALSE(parse_scalar("i+").has_value());
    EXPECT_FALSE(parse_scalar("2i+1").has_value());
}

TEST(ScalarFormat, RendersByKind) {
    EXPECT_EQ(to_string(Scalar(rat(-3, 4))), "-3/4");
    EXPECT_EQ(to_string(Scalar(rat(5))), "5");
    EXPECT_EQ(to_string(Scalar(0.75)), "0.75");
    EXPECT_EQ(to_string(Scalar(1.0)), "1");
    EXPECT_EQ(to_string(Scalar(Complex(0.5, 0.25))), "0.5+0.25i");
    EXPECT_EQ(to_string(Scalar(Complex(0.5, -0.25))), "0.5-0.25i");
    // 17 significant digits reproduce binary64 exactly
    EXPECT_EQ(to_string(Scalar(1.0 / 3.0)), "0.33333333333333331");
}

TEST(ScalarFormat, RoundTripsThroughParse) {
    SampleRng rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational r = rng.rational(1000, 999);
        EXPECT_EQ(parse_scalar(to_string(Scalar(r)))->rational(), r);
        const double d = static_cast<double>(rng.uniform(-1000000, 1000000)) / 262144.0;
        EXPECT_DOUBLE_EQ(parse_scalar(to_string(Scalar(d)))->as_real(), d);
    }
}
