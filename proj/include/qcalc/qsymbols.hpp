#pragma once

/**
 * @file qsymbols.hpp
 * @brief q-Pochhammer symbols, Gaussian binomial coefficients, and the
 *        factor relating n-th q-derivatives at 0 to Taylor coefficients.
 *
 * Gaussian binomials are represented as integer-coefficient polynomials in
 * q built from the q-Pascal recurrence, so evaluation stays exact and is
 * well defined at q = 0 and q = -1 where the Pochhammer-ratio form turns
 * into 0/0.
 */

#include "qcalc/numeric.hpp"
#include "qcalc/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcalc {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    BigInt coeff(int power) const {
        if (power < 0 || power > degree()) return BigInt(0);
        return coeffs_[static_cast<std::size_t>(power)];
    }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) sum[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] += b.coeffs_[i];
        return IntPolynomial(std::move(sum));
    }

    /// Multiplication by the monomial q^shift.
    IntPolynomial shifted(int shift) const {
        if (is_zero()) return {};
        std::vector<BigInt> out(coeffs_.size() + static_cast<std::size_t>(shift), BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(shift)] = coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    template <ScalarType T>
    T evaluate(const T& q) const {
        T value = from_int<T>(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            value = value * q + from_rational<T>(Rational(*it));
        }
        return value;
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt coefficient_sum() const {
        BigInt total{0};
        for (const auto& c : coeffs_) total += c;
        return total;
    }

    bool operator==(const IntPolynomial&) const = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string text;
        for (int m = 0; m <= degree(); ++m) {
            if (coeffs_[static_cast<std::size_t>(m)] == 0) continue;
            if (!text.empty()) text += " + ";
            text += coeffs_[static_cast<std::size_t>(m)].str();
            if (m > 0) text += "*q^" + std::to_string(m);
        }
        return text;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Row n of the q-Pascal triangle: the Gaussian polynomials [n 0], ..., [n n],
/// built from [n k] = [n-1 k-1] + q^k [n-1 k].
inline std::vector<IntPolynomial> gaussian_binomial_row(int n) {
    if (n < 0) throw std::invalid_argument("gaussian_binomial_row requires n >= 0");
    std::vector<IntPolynomial> row{IntPolynomial{BigInt(1)}};
    for (int i = 1; i <= n; ++i) {
        std::vector<IntPolynomial> next(static_cast<std::size_t>(i) + 1);
        next[0] = IntPolynomial{BigInt(1)};
        for (int k = 1; k < i; ++k) {
            next[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(k)].shifted(k);
        }
        next[static_cast<std::size_t>(i)] = IntPolynomial{BigInt(1)};
        row = std::move(next);
    }
    return row;
}

/// The Gaussian binomial [n k] as a polynomial in q; zero outside 0 <= k <= n.
inline IntPolynomial gaussian_binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("gaussian_binomial requires n >= 0");
    if (k < 0 || k > n) return {};
    return gaussian_binomial_row(n)[static_cast<std::size_t>(k)];
}

/// (a;q)_n = (1 - a)(1 - aq)...(1 - aq^(n-1)); the empty product is 1.
template <ScalarType T>
T q_pochhammer(const T& a, const T& q, int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer requires n >= 0");
    const T one = from_int<T>(1);
    T product = one;
    T factor = a;
    for (int k = 0; k < n; ++k) {
        product *= one - factor;
        factor *= q;
    }
    return product;
}

/// The Gaussian binomial [n k] evaluated at q. Agrees with the ratio
/// (q;q)_n / ((q;q)_k (q;q)_(n-k)) wherever that ratio is defined, and stays
/// well defined at q = 0 and q = -1.
template <ScalarType T>
T q_binomial(int n, int k, const T& q) {
    return gaussian_binomial(n, k).evaluate(q);
}

/// The factor c_n(q) = (q;q)_n / ((1-q)^n n!) = [n]_q! / n! multiplying the
/// n-th Taylor coefficient-derivative f^(n)(0) in the value of the n-fold
/// q-derivative at 0. Computed as a product of q-integers so it stays finite
/// for every q != 1.
template <ScalarType T>
T qderiv_zero_factor(int n, const T& q) {
    if (n < 1) throw std::invalid_argument("qderiv_zero_factor requires n >= 1");
    if (is_one(q)) throw std::domain_error("q must not equal 1");
    T product = from_int<T>(1);
    for (int m = 1; m <= n; ++m) {
        product *= q_integer(m, q) / from_int<T>(m);
    }
    return product;
}

/// Sum over k of (-1)^k q^(k(m-n+1) + k(k-1)/2) [n k]_q, computed term by
/// term. Equals (q^(m-n+1); q)_n for every m >= 0, hence (q;q)_n * delta_mn
/// for m = 0..n. The exponent can be negative, so q = 0 is only admitted
/// when m >= n-1.
template <ScalarType T>
T alternating_qbinomial_sum(long long m, int n, const T& q) {
    if (n < 1) throw std::invalid_argument("alternating_qbinomial_sum requires n >= 1");
    if (m < 0) throw std::invalid_argument("alternating_qbinomial_sum requires m >= 0");
    if (is_zero(q) && m < static_cast<long long>(n) - 1) {
        throw std::domain_error("q = 0 requires m >= n - 1 (negative power of zero)");
    }
    const auto row = gaussian_binomial_row(n);
    T total = from_int<T>(0);
    for (int k = 0; k <= n; ++k) {
        const long long exponent =
            static_cast<long long>(k) * (m - n + 1) + static_cast<long long>(k) * (k - 1) / 2;
        T term = int_pow(q, exponent) * row[static_cast<std::size_t>(k)].evaluate(q);
        if (k & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

}  // namespace qcalc
