#pragma once

/**
 * @file numeric.hpp
 * @brief Scalar-kind machinery shared by every value-generic algorithm.
 *
 * The library computes in three scalar kinds: exact rationals, binary64
 * reals, and binary64 complex numbers. Algorithms are templates over the
 * kind; scalar_traits supplies the per-kind glue (conversions, magnitude,
 * exactness). Mixed-kind promotion lives in scalar.hpp.
 */

#include "qcalc/rational.hpp"

#include <cmath>
#include <complex>
#include <concepts>
#include <stdexcept>
#include <type_traits>

namespace qcalc {

using Complex = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_rational(const Rational& v) { return v; }
    static double magnitude(const Rational& v) { return std::fabs(to_double(v)); }
    static bool is_zero(const Rational& v) { return v == 0; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_int(long long v) { return static_cast<double>(v); }
    static double from_rational(const Rational& v) { return to_double(v); }
    static double magnitude(double v) { return std::fabs(v); }
    static bool is_zero(double v) { return v == 0.0; }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static Complex from_int(long long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_rational(const Rational& v) { return Complex(to_double(v), 0.0); }
    static double magnitude(const Complex& v) { return std::abs(v); }
    static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
};

template <class T>
concept ScalarType = requires(const T& v) {
    { scalar_traits<T>::exact } -> std::convertible_to<bool>;
    { scalar_traits<T>::from_int(0LL) } -> std::convertible_to<T>;
    { scalar_traits<T>::from_rational(Rational()) } -> std::convertible_to<T>;
    { scalar_traits<T>::magnitude(v) } -> std::convertible_to<double>;
    { scalar_traits<T>::is_zero(v) } -> std::convertible_to<bool>;
};

template <ScalarType T>
constexpr bool is_exact_kind_v = scalar_traits<T>::exact;

template <ScalarType T>
T from_int(long long v) {
    return scalar_traits<T>::from_int(v);
}

template <ScalarType T>
T from_rational(const Rational& v) {
    return scalar_traits<T>::from_rational(v);
}

template <ScalarType T>
double magnitude(const T& v) {
    return scalar_traits<T>::magnitude(v);
}

template <ScalarType T>
bool is_zero(const T& v) {
    return scalar_traits<T>::is_zero(v);
}

template <ScalarType T>
bool is_one(const T& v) {
    return v == from_int<T>(1);
}

/// base^exponent by binary exponentiation; 0^0 = 1, 0^negative rejected.
template <ScalarType T>
T int_pow(const T& base, long long exponent) {
    if constexpr (std::is_same_v<T, Rational>) {
        return rational_pow(base, exponent);
    } else {
        if (exponent == 0) return from_int<T>(1);
        if (is_zero(base)) {
            if (exponent < 0) throw std::domain_error("negative power of zero");
            return base;
        }
        unsigned long long remaining = static_cast<unsigned long long>(
            exponent < 0 ? -(exponent + 1) + 1ULL : exponent);
        T acc = from_int<T>(1);
        T square = base;
        while (remaining != 0) {
            if (remaining & 1ULL) acc *= square;
            square *= square;
            remaining >>= 1;
        }
        return exponent < 0 ? from_int<T>(1) / acc : acc;
    }
}

/// The q-integer [m]_q = 1 + q + ... + q^(m-1); [0]_q = 0.
template <ScalarType T>
T q_integer(long long m, const T& q) {
    if (m < 0) throw std::invalid_argument("q_integer requires m >= 0");
    T sum = from_int<T>(0);
    for (long long i = 0; i < m; ++i) sum = sum * q + from_int<T>(1);
    return sum;
}

/// The q-factorial [n]_q! = [1]_q [2]_q ... [n]_q.
template <ScalarType T>
T q_factorial(int n, const T& q) {
    if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
    T product = from_int<T>(1);
    for (int m = 1; m <= n; ++m) product *= q_integer(m, q);
    return product;
}

// Anchors for the elementary-function jet recurrences: the value of the
// function at a jet's constant term. Exact rationals only admit the special
// points the recurrences need (exp 0, log 1, sin/cos 0); anything else has
// no exact representation and is rejected.

inline double scalar_exp(double v) { return std::exp(v); }
inline Complex scalar_exp(const Complex& v) { return std::exp(v); }
inline Rational scalar_exp(const Rational& v) {
    if (v == 0) return Rational(1);
    throw std::domain_error("exp of a nonzero rational is not rational");
}

inline double scalar_log(double v) {
    if (!(v > 0.0)) throw std::domain_error("log requires a positive argument");
    return std::log(v);
}
inline Complex scalar_log(const Complex& v) {
    if (!(v.real() > 0.0)) throw std::domain_error("log requires an argument with positive real part");
    return std::log(v);
}
inline Rational scalar_log(const Rational& v) {
    if (v == 1) return Rational(0);
    if (v <= 0) throw std::domain_error("log requires a positive argument");
    throw std::domain_error("log of a rational other than 1 is not rational");
}

inline double scalar_sin(double v) { return std::sin(v); }
inline Complex scalar_sin(const Complex& v) { return std::sin(v); }
inline Rational scalar_sin(const Rational& v) {
    if (v == 0) return Rational(0);
    throw std::domain_error("sin of a nonzero rational is not rational");
}

inline double scalar_cos(double v) { return std::cos(v); }
inline Complex scalar_cos(const Complex& v) { return std::cos(v); }
inline Rational scalar_cos(const Rational& v) {
    if (v == 0) return Rational(1);
    throw std::domain_error("cos of a nonzero rational is not rational");
}

}  // namespace qcalc
