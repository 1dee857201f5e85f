#include "qcalc/polynomial.hpp"

#include <gtest/gtest.h>

#include "qcalc/identities.hpp"
#include "qcalc/sampling.hpp"
#include "testutil.hpp"

using namespace qcalc;
using qcalc::testing::rat;

TEST(Polynomial, Normalization) {
    EXPECT_TRUE(Polynomial{}.is_zero());
    EXPECT_EQ(Polynomial{}.degree(), -1);
    const Polynomial p({rat(1), rat(0), rat(0)});
    EXPECT_EQ(p.degree(), 0);
    EXPECT_EQ(p.coeff(2), rat(0));
    EXPECT_EQ(Polynomial({rat(3), rat(-3)}) + Polynomial({rat(-3), rat(3)}), Polynomial{});
}

TEST(Polynomial, Evaluation) {
    const Polynomial p{rat(5), rat(2), rat(0), rat(1)};  // 5 + 2x + x^3
    EXPECT_EQ(p(rat(3)), rat(38));
    EXPECT_EQ(p(rat(-1, 2)), rat(31, 8));
}

TEST(QDerivative, ConstantsAnnihilated) {
    EXPECT_TRUE(q_derivative(Polynomial{rat(7)}, rat(2, 3)).is_zero());
    EXPECT_TRUE(q_derivative(Polynomial{}, rat(2, 3)).is_zero());
}

TEST(QDerivative, MonomialRule) {
    // x^2 -> (1+q)x at q=1/2
    EXPECT_EQ(q_derivative(Polynomial{rat(0), rat(0), rat(1)}, rat(1, 2)),
              Polynomial({rat(0), rat(3, 2)}));
}

TEST(QDerivative, Linearity) {
    // 1 + x + x^2 -> 1 + (3/2)x
    EXPECT_EQ(q_derivative(Polynomial{rat(1), rat(1), rat(1)}, rat(1, 2)),
              Polynomial({rat(1), rat(3, 2)}));
    SampleRng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng.uniform(0, 7)), 9, 4);
        const Polynomial r = random_polynomial(rng, static_cast<int>(rng.uniform(0, 7)), 9, 4);
        const Rational q = random_q(rng);
        const Rational scale = rng.rational(7, 3);
        EXPECT_EQ(q_derivative(p + r, q), q_derivative(p, q) + q_derivative(r, q));
        EXPECT_EQ(q_derivative(scale * p, q), scale * q_derivative(p, q));
    }
}

TEST(QDerivative, RejectsQEqualsOne) {
    EXPECT_THROW(q_derivative(Polynomial{rat(0), rat(1)}, rat(1)), std::domain_error);
}

TEST(QDerivative, ConstantTermIsFirstDerivativeAtZero) {
    SampleRng rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng.uniform(1, 7)), 9, 4);
        const Rational q = random_q(rng);
        EXPECT_EQ(q_derivative(p, q).coeff(0), p.coeff(1));
    }
}

TEST(QDerivativeN, MonomialGivesQFactorial) {
    // x^n -> [n]_q!; for n=2, q=1/2 this is 3/2
    EXPECT_EQ(q_derivative_n(Polynomial{rat(0), rat(0), rat(1)}, rat(1, 2), 2),
              Polynomial{rat(3, 2)});
    for (int n = 1; n <= 6; ++n) {
        const Rational q = rat(3, 7);
        EXPECT_EQ(q_derivative_n(Polynomial::monomial(rat(1), n), q, n),
                  Polynomial{q_factorial(n, q)});
    }
}

TEST(QDerivativeN, DegreeDrops) {
    SampleRng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int degree = static_cast<int>(rng.uniform(2, 8));
        const Polynomial p = random_polynomial(rng, degree, 9, 4);
        const Rational q = random_q(rng, {.allow_minus_one = false});
        Polynomial d = p;
        for (int n = 1; n <= degree + 1; ++n) {
            d = q_derivative(d, q);
            EXPECT_EQ(d.degree(), degree - n >= 0 ? degree - n : -1);
        }
        EXPECT_TRUE(q_derivative_n(p, q, degree + 1).is_zero());
    }
}

TEST(QDerivativeN, QZeroShiftsCoefficients) {
    // x^3 + 2x + 5 at q=0, n=2 -> x, cross-checked against the remainder form
    const Polynomial p{rat(5), rat(2), rat(0), rat(1)};
    const Polynomial expected({rat(0), rat(1)});
    EXPECT_EQ(q_derivative_n(p, rat(0), 2), expected);
    EXPECT_EQ(taylor_remainder_quotient(p, 2, rat(3)), expected(rat(3)));
}

TEST(ClosedForm, SingleStepMatchesDefinition) {
    // p = x^2, q = 1/2, n = 1, x = 2/5: (f(x) - f(qx))/((1-q)x) = 3/5
    const Polynomial p{rat(0), rat(0), rat(1)};
    EXPECT_EQ(q_derivative_closed_form(p, rat(1, 2), 1, rat(2, 5)), rat(3, 5));
}

TEST(ClosedForm, SecondOrderWeights) {
    // the n = 2 sum is f(x) - (1 + 1/q) f(qx) + (1/q) f(q^2 x), uniformly in p
    SampleRng rng(24);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng.uniform(0, 6)), 9, 4);
        const Rational q = random_q(rng, {.allow_zero = false});
        const Rational x = rng.nonzero_rational(6, 3);
        const Rational qinv = Rational(1) / q;
        const Rational by_hand = (p(x) - (Rational(1) + qinv) * p(q * x) + qinv * p(q * q * x)) /
                                 (rational_pow(Rational(1) - q, 2) * x * x);
        EXPECT_EQ(q_derivative_closed_form(p, q, 2, x), by_hand);
    }
}

TEST(ClosedForm, LegalAtQMinusOne) {
    const Polynomial cubic{rat(0), rat(0), rat(0), rat(1)};
    const Rational direct = q_derivative_n(cubic, rat(-1), 2)(rat(1));
    EXPECT_EQ(q_derivative_closed_form(cubic, rat(-1), 2, rat(1)), direct);
}

TEST(ClosedForm, Rejections) {
    const Polynomial p{rat(1), rat(1)};
    EXPECT_THROW(q_derivative_closed_form(p, rat(0), 1, rat(1)), std::domain_error);
    EXPECT_THROW(q_derivative_closed_form(p, rat(1), 1, rat(1)), std::domain_error);
    EXPECT_THROW(q_derivative_closed_form(p, rat(1, 2), 1, rat(0)), std::domain_error);
}

TEST(ClosedForm, EqualsIterateEverywhere) {
    const SweepOutcome outcome = sweep_closed_form(31337, 150);
    EXPECT_EQ(outcome.failures, 0) << outcome.first_failure;
}

TEST(TaylorRemainderQuotient, HandValue) {
    // (p(3) - 5 - 2*3)/9 = 27/9 = 3 for p = x^3 + 2x + 5
    const Polynomial p{rat(5), rat(2), rat(0), rat(1)};
    EXPECT_EQ(taylor_remainder_quotient(p, 2, rat(3)), rat(3));
}

TEST(TaylorRemainderQuotient, LowDegreeVanishes) {
    SampleRng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        const int degree = static_cast<int>(rng.uniform(0, 4));
        const Polynomial p = random_polynomial(rng, degree, 9, 4);
        const Rational x = rng.nonzero_rational(6, 3);
        EXPECT_EQ(taylor_remainder_quotient(p, degree + 1 + static_cast<int>(rng.uniform(0, 2)), x),
                  rat(0));
    }
}

TEST(TaylorRemainderQuotient, MonomialIsOne) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(taylor_remainder_quotient(Polynomial::monomial(rat(1), n), n, rat(-7, 3)), rat(1));
    }
}

TEST(TaylorRemainderQuotient, MatchesQZeroIterate) {
    SampleRng rng(26);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng.uniform(0, 8)), 9, 4);
        const int n = static_cast<int>(rng.uniform(1, 8));
        const Rational x = rng.nonzero_rational(6, 3);
        EXPECT_EQ(taylor_remainder_quotient(p, n, x), q_derivative_n(p, rat(0), n)(x));
    }
}

TEST(QDerivAtZero, HandValues) {
    // p = x^2, q = 1/2, n = 2: c_2(1/2) * 2! = 3/2
    EXPECT_EQ(qderiv_at_zero(Polynomial{rat(0), rat(0), rat(1)}, rat(1, 2), 2), rat(3, 2));
    // vanishing n-th coefficient
    EXPECT_EQ(qderiv_at_zero(Polynomial{rat(4), rat(3)}, rat(2), 2), rat(0));
}

TEST(QDerivAtZero, QMinusOneVanishesForHigherOrders) {
    SampleRng rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng.uniform(2, 8)), 9, 4);
        const int n = static_cast<int>(rng.uniform(2, 6));
        EXPECT_EQ(qderiv_at_zero(p, rat(-1), n), rat(0));
    }
}

TEST(QDerivAtZero, MatchesConstantTermOfIterate) {
    SampleRng rng(28);
    const Rational special[] = {rat(0), rat(-1), rat(2), rat(-1, 2)};
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng.uniform(1, 8)), 9, 4);
        for (const Rational& q : special) {
            for (int n = 1; n <= p.degree(); ++n) {
                EXPECT_EQ(q_derivative_n(p, q, n).coeff(0), qderiv_at_zero(p, q, n));
            }
        }
        const Rational q = random_q(rng);
        for (int n = 1; n <= p.degree(); ++n) {
            EXPECT_EQ(q_derivative_n(p, q, n).coeff(0), qderiv_at_zero(p, q, n));
        }
    }
}

TEST(QMinusOneCollapse, SecondIterateIsZeroPolynomial) {
    const SweepOutcome outcome = sweep_qminus1_collapse(5150, 100);
    EXPECT_EQ(outcome.failures, 0) << outcome.first_failure;
}

TEST(Polynomial, ToStringFormat) {
    const Polynomial p{rat(5), rat(-2), rat(0), rat(1, 2)};
    EXPECT_EQ(p.to_string(), "1/2*x^3-2*x+5");
    EXPECT_EQ(Polynomial{}.to_string(), "0");
    EXPECT_EQ(Polynomial({rat(0), rat(-1)}).to_string(), "-x");
    EXPECT_EQ(Polynomial({rat(-3, 4)}).to_string(), "-3/4");
}
