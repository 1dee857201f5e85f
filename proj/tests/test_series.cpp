#include "qcalc/series.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "qcalc/polynomial.hpp"
#include "qcalc/sampling.hpp"
#include "testutil.hpp"

using namespace qcalc;
using qcalc::testing::rat;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PowerSeries<Rational> geometric_series(int order) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, rat(1));
    return PowerSeries<Rational>(Jet<Rational>(rat(0), std::move(coeffs)), 1.0);
}

}  // namespace

TEST(PowerSeries, RequiresCenterZeroAndPositiveRadius) {
    EXPECT_THROW(PowerSeries<Rational>(Jet<Rational>::variable(rat(1), 2), 1.0),
                 std::invalid_argument);
    EXPECT_THROW(PowerSeries<Rational>(Jet<Rational>::variable(rat(0), 2), 0.0),
                 std::invalid_argument);
    EXPECT_NO_THROW(PowerSeries<Rational>(Jet<Rational>::variable(rat(0), 2), kInf));
}

TEST(SeriesQDerivative, GeometricGivesQIntegers) {
    // a_m = 1: b_j = (1 - q^(j+1))/(1 - q) = [j+1]_q
    const auto s = geometric_series(6);
    const Rational q = rat(1, 3);
    const auto d = series_q_derivative(s, q, 1);
    EXPECT_EQ(d.order(), 5);
    for (int j = 0; j <= d.order(); ++j) {
        EXPECT_EQ(d.coeff(j), q_integer(j + 1, q));
        EXPECT_EQ(d.coeff(j), (Rational(1) - rational_pow(q, j + 1)) / (Rational(1) - q));
    }
}

TEST(SeriesQDerivative, ConstantsVanish) {
    auto constant = PowerSeries<Rational>(Jet<Rational>::constant(rat(9), rat(0), 5), kInf);
    for (int n = 1; n <= 5; ++n) {
        const auto d = series_q_derivative(constant, rat(-7, 2), n);
        for (int j = 0; j <= d.order(); ++j) EXPECT_EQ(d.coeff(j), rat(0));
    }
}

TEST(SeriesQDerivative, LeadingCoefficientIsZeroValue) {
    // b_0 = a_n (q;q)_n / (1-q)^n = a_n [n]_q!
    SampleRng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = static_cast<int>(rng.uniform(1, 10));
        std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
        for (auto& c : coeffs) c = rng.rational(9, 5);
        const PowerSeries<Rational> s(Jet<Rational>(rat(0), coeffs), kInf);
        const int n = static_cast<int>(rng.uniform(1, order));
        const Rational q = random_q(rng);
        const Rational a_n = coeffs[static_cast<std::size_t>(n)];
        EXPECT_EQ(series_q_derivative(s, q, n).coeff(0), a_n * q_factorial(n, q));
        if (q != -1) {
            EXPECT_EQ(series_q_derivative(s, q, n).coeff(0),
                      a_n * q_pochhammer(q, q, n) / rational_pow(Rational(1) - q, n));
        }
    }
}

TEST(SeriesQDerivative, OrderDropsByN) {
    const auto s = geometric_series(8);
    EXPECT_EQ(series_q_derivative(s, rat(2), 3).order(), 5);
    EXPECT_THROW(series_q_derivative(s, rat(2), 9), std::invalid_argument);
    EXPECT_THROW(series_q_derivative(s, rat(1), 1), std::domain_error);
}

TEST(SeriesQDerivative, SemigroupExact) {
    // n single steps == one n-step, coefficient for coefficient
    SampleRng rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        const int order = 10;
        std::vector<Rational> coeffs(order + 1);
        for (auto& c : coeffs) c = rng.rational(9, 5);
        const PowerSeries<Rational> s(Jet<Rational>(rat(0), coeffs), 2.0);
        const Rational q = random_q(rng);
        for (int n = 1; n <= 6; ++n) {
            PowerSeries<Rational> stepwise = s;
            for (int i = 0; i < n; ++i) stepwise = series_q_derivative(stepwise, q, 1);
            const PowerSeries<Rational> direct = series_q_derivative(s, q, n);
            EXPECT_EQ(stepwise.jet(), direct.jet());
            // radii are doubles; repeated scaling may round differently
            EXPECT_TRUE(qcalc::testing::near_rel(stepwise.radius(), direct.radius(), 1e-12));
        }
    }
}

TEST(SeriesQDerivative, AgreesWithPolynomialCalculus) {
    SampleRng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        const int degree = static_cast<int>(rng.uniform(1, 8));
        const Polynomial p = random_polynomial(rng, degree, 9, 4);
        const PowerSeries<Rational> s(p.taylor_jet(rat(0), degree + 2), kInf);
        const Rational q = random_q(rng);
        const int n = static_cast<int>(rng.uniform(1, degree));
        const auto d = series_q_derivative(s, q, n);
        const Polynomial dp = q_derivative_n(p, q, n);
        for (int j = 0; j <= d.order(); ++j) EXPECT_EQ(d.coeff(j), dp.coeff(j));
    }
}

TEST(ScaledRadius, ZeroAndStretchRules) {
    EXPECT_DOUBLE_EQ(q_scaled_radius(1.0, rat(2), 3), 0.125);
    EXPECT_DOUBLE_EQ(q_scaled_radius(1.0, rat(0), 5), 1.0);
    EXPECT_DOUBLE_EQ(q_scaled_radius(1.0, rat(-1), 7), 1.0);
    EXPECT_DOUBLE_EQ(q_scaled_radius(1.0, rat(1, 2), 9), 1.0);
    EXPECT_DOUBLE_EQ(q_scaled_radius(2.0, 1.5, 2), 2.0 / 2.25);
    EXPECT_EQ(q_scaled_radius(kInf, rat(3), 2), kInf);
    EXPECT_EQ(q_scaled_radius(kInf, rat(0), 2), kInf);
}

TEST(ScaledRadius, Monotonicity) {
    SampleRng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational q = random_q(rng);
        const int n = static_cast<int>(rng.uniform(0, 6));
        const double rho = 0.25 * static_cast<double>(rng.uniform(1, 16));
        const double out = q_scaled_radius(rho, q, n);
        EXPECT_LE(out, rho);
        if (magnitude(q) <= 1.0 || n == 0) {
            EXPECT_DOUBLE_EQ(out, rho);
        } else {
            EXPECT_LT(out, rho);
        }
    }
}

TEST(SeriesQDerivative, ComplexKind) {
    // complex q goes through the same machinery
    std::vector<Complex> coeffs(5, Complex(1.0, 0.0));
    const PowerSeries<Complex> s(Jet<Complex>(Complex(0, 0), coeffs), 1.0);
    const Complex q(0.0, 0.5);
    const auto d = series_q_derivative(s, q, 1);
    for (int j = 0; j <= d.order(); ++j) {
        const Complex expected = (Complex(1, 0) - std::pow(q, j + 1)) / (Complex(1, 0) - q);
        EXPECT_LT(std::abs(d.coeff(j) - expected), 1e-14);
    }
}
