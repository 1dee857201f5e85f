#pragma once

/**
 * @file jet.hpp
 * @brief Truncated Taylor-series arithmetic.
 *
 * A Jet carries the coefficients a_m = f^(m)(center)/m! of a function's
 * Taylor expansion, truncated at a fixed order. Arithmetic and elementary
 * functions propagate coefficients by the standard recurrences; nothing
 * beyond the truncation order is ever read or written.
 */

#include "qcalc/numeric.hpp"

#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcalc {

template <ScalarType T>
class Jet {
public:
    Jet(T center, std::vector<T> coeffs) : center_(std::move(center)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("a jet needs at least its order-0 coefficient");
    }

    static Jet constant(const T& value, const T& center, int order) {
        check_order(order);
        std::vector<T> coeffs(static_cast<std::size_t>(order) + 1, from_int<T>(0));
        coeffs[0] = value;
        return Jet(center, std::move(coeffs));
    }

    static Jet variable(const T& center, int order) {
        check_order(order);
        std::vector<T> coeffs(static_cast<std::size_t>(order) + 1, from_int<T>(0));
        coeffs[0] = center;
        if (order >= 1) coeffs[1] = from_int<T>(1);
        return Jet(center, std::move(coeffs));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const T& center() const { return center_; }

    const T& coeff(int m) const {
        if (m < 0 || m > order()) throw std::out_of_range("jet coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(m)];
    }

    const std::vector<T>& coefficients() const { return coeffs_; }

    /// f^(m)(center) = m! * a_m.
    T derivative(int m) const {
        if (m < 0 || m > order()) throw std::out_of_range("derivative order exceeds jet order");
        T factorial = from_int<T>(1);
        for (int i = 2; i <= m; ++i) factorial *= from_int<T>(i);
        return factorial * coeffs_[static_cast<std::size_t>(m)];
    }

    /// Horner evaluation of the truncated expansion at center + offset.
    T evaluate_offset(const T& offset) const {
        T value = from_int<T>(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * offset + *it;
        return value;
    }

    bool operator==(const Jet&) const = default;

    friend Jet operator+(const Jet& u, const Jet& v) {
        check_compatible(u, v);
        Jet out = u;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += v.coeffs_[i];
        return out;
    }

    friend Jet operator-(const Jet& u, const Jet& v) {
        check_compatible(u, v);
        Jet out = u;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= v.coeffs_[i];
        return out;
    }

    Jet operator-() const {
        Jet out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    /// Cauchy product truncated at the common order.
    friend Jet operator*(const Jet& u, const Jet& v) {
        check_compatible(u, v);
        const std::size_t size = u.coeffs_.size();
        std::vector<T> out(size, from_int<T>(0));
        for (std::size_t i = 0; i < size; ++i) {
            if (is_zero(u.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < size; ++j) {
                out[i + j] += u.coeffs_[i] * v.coeffs_[j];
            }
        }
        return Jet(u.center_, std::move(out));
    }

    /// Forward-substitution division: w_i = (u_i - sum_{j<i} w_j v_{i-j}) / v_0.
    friend Jet operator/(const Jet& u, const Jet& v) {
        check_compatible(u, v);
        if (is_zero(v.coeffs_[0])) throw std::domain_error("division by a jet with zero constant term");
        const std::size_t size = u.coeffs_.size();
        std::vector<T> out(size, from_int<T>(0));
        for (std::size_t i = 0; i < size; ++i) {
            T acc = u.coeffs_[i];
            for (std::size_t j = 0; j < i; ++j) acc -= out[j] * v.coeffs_[i - j];
            out[i] = acc / v.coeffs_[0];
        }
        return Jet(u.center_, std::move(out));
    }

private:
    static void check_order(int order) {
        if (order < 0) throw std::invalid_argument("jet order must be nonnegative");
    }

    static void check_compatible(const Jet& u, const Jet& v) {
        if (u.coeffs_.size() != v.coeffs_.size()) throw std::invalid_argument("jet order mismatch");
        if (!(u.center_ == v.center_)) throw std::invalid_argument("jet center mismatch");
    }

    T center_;
    std::vector<T> coeffs_;
};

/// e_0 = exp(u_0); e_i = (1/i) sum_{j=1..i} j u_j e_{i-j}.
template <ScalarType T>
Jet<T> exp(const Jet<T>& u) {
    const auto& a = u.coefficients();
    std::vector<T> e(a.size(), from_int<T>(0));
    e[0] = scalar_exp(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        T acc = from_int<T>(0);
        for (std::size_t j = 1; j <= i; ++j) {
            acc += from_int<T>(static_cast<long long>(j)) * a[j] * e[i - j];
        }
        e[i] = acc / from_int<T>(static_cast<long long>(i));
    }
    return Jet<T>(u.center(), std::move(e));
}

/// w_0 = log(u_0); w_i = (u_i - (1/i) sum_{j=1..i-1} j w_j u_{i-j}) / u_0.
template <ScalarType T>
Jet<T> log(const Jet<T>& u) {
    const auto& a = u.coefficients();
    std::vector<T> w(a.size(), from_int<T>(0));
    w[0] = scalar_log(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        T acc = from_int<T>(0);
        for (std::size_t j = 1; j < i; ++j) {
            acc += from_int<T>(static_cast<long long>(j)) * w[j] * a[i - j];
        }
        w[i] = (a[i] - acc / from_int<T>(static_cast<long long>(i))) / a[0];
    }
    return Jet<T>(u.center(), std::move(w));
}

namespace detail {

// sin and cos propagate jointly: s_i = (1/i) sum j u_j c_{i-j},
// c_i = -(1/i) sum j u_j s_{i-j}.
template <ScalarType T>
std::pair<Jet<T>, Jet<T>> sin_cos(const Jet<T>& u) {
    const auto& a = u.coefficients();
    std::vector<T> s(a.size(), from_int<T>(0));
    std::vector<T> c(a.size(), from_int<T>(0));
    s[0] = scalar_sin(a[0]);
    c[0] = scalar_cos(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        T acc_s = from_int<T>(0);
        T acc_c = from_int<T>(0);
        for (std::size_t j = 1; j <= i; ++j) {
            const T weighted = from_int<T>(static_cast<long long>(j)) * a[j];
            acc_s += weighted * c[i - j];
            acc_c += weighted * s[i - j];
        }
        s[i] = acc_s / from_int<T>(static_cast<long long>(i));
        c[i] = -(acc_c / from_int<T>(static_cast<long long>(i)));
    }
    return {Jet<T>(u.center(), std::move(s)), Jet<T>(u.center(), std::move(c))};
}

}  // namespace detail

template <ScalarType T>
Jet<T> sin(const Jet<T>& u) {
    return detail::sin_cos(u).first;
}

template <ScalarType T>
Jet<T> cos(const Jet<T>& u) {
    return detail::sin_cos(u).second;
}

/// Integer power of a jet. Negative exponents go through jet division and
/// require a nonzero constant term.
template <ScalarType T>
Jet<T> pow(const Jet<T>& base, long long exponent) {
    const Jet<T> one = Jet<T>::constant(from_int<T>(1), base.center(), base.order());
    if (exponent == 0) return one;
    if (exponent < 0) {
        if (is_zero(base.coeff(0))) {
            throw std::domain_error("negative power of a jet with zero constant term");
        }
        if (exponent == std::numeric_limits<long long>::min()) {
            throw std::invalid_argument("power exponent out of range");
        }
        return one / pow(base, -exponent);
    }
    // truncated multiplication is exact mod x^(order+1), so binary
    // exponentiation agrees with repeated multiplication
    Jet<T> acc = one;
    Jet<T> square = base;
    unsigned long long remaining = static_cast<unsigned long long>(exponent);
    while (remaining != 0) {
        if (remaining & 1ULL) acc = acc * square;
        if (remaining >>= 1; remaining != 0) square = square * square;
    }
    return acc;
}

}  // namespace qcalc
