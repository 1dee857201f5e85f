#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact q-derivative calculus on rational-coefficient polynomials.
 *
 * This is the ground-truth path: every identity the numeric operator is
 * expected to satisfy can be checked here coefficient-by-coefficient with
 * no rounding anywhere.
 */

#include "qcalc/jet.hpp"
#include "qcalc/qsymbols.hpp"
#include "qcalc/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcalc {

/// Polynomial in x over exact rationals. Coefficients are stored by
/// ascending power with trailing zeros trimmed; the zero polynomial is the
/// empty sequence and has degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const Rational& c, int power) {
        if (power < 0) throw std::invalid_argument("monomial power must be nonnegative");
        std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1, Rational(0));
        coeffs.back() = c;
        return Polynomial(std::move(coeffs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(int m) const {
        if (m < 0 || m > degree()) return Rational(0);
        return coeffs_[static_cast<std::size_t>(m)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const {
        Rational value{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
        return value;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) sum[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] += b.coeffs_[i];
        return Polynomial(std::move(sum));
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(prod));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return {};
        Polynomial out = p;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    bool operator==(const Polynomial&) const = default;

    /// Taylor expansion around an arbitrary center, in any scalar kind.
    template <ScalarType T>
    Jet<T> taylor_jet(const T& center, int order) const {
        Jet<T> value = Jet<T>::constant(from_int<T>(0), center, order);
        const Jet<T> x = Jet<T>::variable(center, order);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            value = value * x + Jet<T>::constant(from_rational<T>(*it), center, order);
        }
        return value;
    }

    /// Text form, highest power first: "1/2*x^3-2*x+5".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string text;
        for (int m = degree(); m >= 0; --m) {
            const Rational c = coeff(m);
            if (c == 0) continue;
            const bool leading = text.empty();
            const Rational abs_c = c < 0 ? Rational(-c) : c;
            if (c < 0) {
                text += "-";
            } else if (!leading) {
                text += "+";
            }
            if (abs_c != 1 || m == 0) {
                text += qcalc::to_string(abs_c);
                if (m > 0) text += "*";
            }
            if (m > 0) {
                text += "x";
                if (m > 1) text += "^" + std::to_string(m);
            }
        }
        return text;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// The q-derivative of a polynomial: x^m maps to [m]_q x^(m-1). The constant
/// term of the result is p'(0), matching the operator's value at x = 0.
inline Polynomial q_derivative(const Polynomial& p, const Rational& q) {
    if (q == 1) throw std::domain_error("q must not equal 1");
    if (p.degree() < 1) return {};
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    for (int m = 1; m <= p.degree(); ++m) {
        out[static_cast<std::size_t>(m - 1)] = q_integer(m, q) * p.coeff(m);
    }
    return Polynomial(std::move(out));
}

/// n-fold application of q_derivative.
inline Polynomial q_derivative_n(const Polynomial& p, const Rational& q, int n) {
    if (n < 1) throw std::invalid_argument("q_derivative_n requires n >= 1");
    Polynomial out = p;
    for (int i = 0; i < n; ++i) out = q_derivative(out, q);
    return out;
}

/// Single-sum form of the n-fold q-derivative at a point:
///   (1-q)^(-n) x^(-n) sum_k (-1)^k q^(-k(n-1)+k(k-1)/2) [n k]_q p(q^k x).
/// The exponents of q are negative, so q = 0 is excluded (use
/// taylor_remainder_quotient for that case); q = -1 is fine.
inline Rational q_derivative_closed_form(const Polynomial& p, const Rational& q, int n,
                                         const Rational& x) {
    if (n < 1) throw std::invalid_argument("q_derivative_closed_form requires n >= 1");
    if (q == 1) throw std::domain_error("q must not equal 1");
    if (q == 0) throw std::domain_error("q = 0 is handled by the Taylor-remainder form");
    if (x == 0) throw std::domain_error("x must be nonzero");
    const auto row = gaussian_binomial_row(n);
    Rational sum{0};
    for (int k = 0; k <= n; ++k) {
        const long long exponent =
            -static_cast<long long>(k) * (n - 1) + static_cast<long long>(k) * (k - 1) / 2;
        const Rational weight = rational_pow(q, exponent) * row[static_cast<std::size_t>(k)].evaluate(q);
        const Rational term = weight * p(rational_pow(q, k) * x);
        if (k & 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum / (rational_pow(Rational(1) - q, n) * rational_pow(x, n));
}

/// x^(-n) (p(x) - sum_{k<n} p^(k)(0)/k! x^k): the n-fold q-derivative at
/// q = 0, evaluated away from 0.
inline Rational taylor_remainder_quotient(const Polynomial& p, int n, const Rational& x) {
    if (n < 1) throw std::invalid_argument("taylor_remainder_quotient requires n >= 1");
    if (x == 0) throw std::domain_error("x must be nonzero");
    Rational remainder = p(x);
    Rational x_power{1};
    for (int k = 0; k < n; ++k) {
        remainder -= p.coeff(k) * x_power;
        x_power *= x;
    }
    return remainder / rational_pow(x, n);
}

/// Exact value of the n-fold q-derivative at 0:
/// c_n(q) * p^(n)(0) = [n]_q! * (coefficient of x^n).
inline Rational qderiv_at_zero(const Polynomial& p, const Rational& q, int n) {
    if (n < 1) throw std::invalid_argument("qderiv_at_zero requires n >= 1");
    const Rational nth_derivative = Rational(int_factorial(n)) * p.coeff(n);
    return qderiv_zero_factor(n, q) * nth_derivative;
}

}  // namespace qcalc
