#pragma once

/**
 * @file scalar.hpp
 * @brief Runtime-kinded numeric value: exact rational, real, or complex.
 *
 * Mixed-kind arithmetic promotes exact -> real -> complex and never the
 * reverse. This is the boundary type the CLI uses to carry user-supplied
 * numbers and to render results; the algorithms themselves are templates
 * over a single kind (see numeric.hpp).
 */

#include "qcalc/numeric.hpp"
#include "qcalc/rational.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace qcalc {

enum class ScalarKind { exact, real, cplx };

class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(const Rational& v) : value_(v) {}
    Scalar(Rational&& v) : value_(std::move(v)) {}
    Scalar(long long v) : value_(Rational(v)) {}
    Scalar(int v) : value_(Rational(v)) {}
    Scalar(double v) : value_(v) {}
    Scalar(const Complex& v) : value_(v) {}

    ScalarKind kind() const { return static_cast<ScalarKind>(value_.index()); }
    bool is_exact() const { return kind() == ScalarKind::exact; }

    const Rational& rational() const {
        if (kind() != ScalarKind::exact) throw std::logic_error("scalar is not exact");
        return std::get<Rational>(value_);
    }

    /// Value as a real double; rejects complex values with nonzero
    /// imaginary part rather than silently dropping it.
    double as_real() const {
        switch (kind()) {
            case ScalarKind::exact: return to_double(std::get<Rational>(value_));
            case ScalarKind::real: return std::get<double>(value_);
            default: {
                const Complex& z = std::get<Complex>(value_);
                if (z.imag() != 0.0) throw std::domain_error("complex value has no real representation");
                return z.real();
            }
        }
    }

    Complex as_complex() const {
        switch (kind()) {
            case ScalarKind::exact: return Complex(to_double(std::get<Rational>(value_)), 0.0);
            case ScalarKind::real: return Complex(std::get<double>(value_), 0.0);
            default: return std::get<Complex>(value_);
        }
    }

    bool is_zero() const {
        switch (kind()) {
            case ScalarKind::exact: return std::get<Rational>(value_) == 0;
            case ScalarKind::real: return std::get<double>(value_) == 0.0;
            default: return std::get<Complex>(value_) == Complex(0.0, 0.0);
        }
    }

    bool is_one() const {
        switch (kind()) {
            case ScalarKind::exact: return std::get<Rational>(value_) == 1;
            case ScalarKind::real: return std::get<double>(value_) == 1.0;
            default: return std::get<Complex>(value_) == Complex(1.0, 0.0);
        }
    }

    double magnitude() const {
        switch (kind()) {
            case ScalarKind::exact: return std::fabs(to_double(std::get<Rational>(value_)));
            case ScalarKind::real: return std::fabs(std::get<double>(value_));
            default: return std::abs(std::get<Complex>(value_));
        }
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return apply(a, b, [](const auto& x, const auto& y) { return x / y; });
    }

    Scalar operator-() const {
        switch (kind()) {
            case ScalarKind::exact: return Scalar(Rational(-std::get<Rational>(value_)));
            case ScalarKind::real: return Scalar(-std::get<double>(value_));
            default: return Scalar(-std::get<Complex>(value_));
        }
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.kind() == ScalarKind::exact && b.kind() == ScalarKind::exact) {
            return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
        }
        return a.as_complex() == b.as_complex();
    }

private:
    // promotion: exact -> real -> complex, never downward
    template <class F>
    static Scalar apply(const Scalar& a, const Scalar& b, F&& op) {
        const ScalarKind k = a.kind() >= b.kind() ? a.kind() : b.kind();
        switch (k) {
            case ScalarKind::exact:
                return Scalar(op(std::get<Rational>(a.value_), std::get<Rational>(b.value_)));
            case ScalarKind::real: return Scalar(op(a.as_real(), b.as_real()));
            default: return Scalar(op(a.as_complex(), b.as_complex()));
        }
    }

    std::variant<Rational, double, Complex> value_;
};

/// 17 significant digits: enough to reproduce any binary64 exactly.
inline std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return std::string(buffer);
}

inline std::string format_complex(const Complex& z) {
    std::string out = format_double(z.real());
    out += (std::signbit(z.imag()) ? "-" : "+");
    out += format_double(std::fabs(z.imag()));
    out += "i";
    return out;
}

/// Exact values render as "p/q", reals as 17-significant-digit decimals,
/// complex values as "a+bi".
inline std::string to_string(const Scalar& value) {
    switch (value.kind()) {
        case ScalarKind::exact: return to_string(value.rational());
        case ScalarKind::real: return format_double(value.as_real());
        default: return format_complex(value.as_complex());
    }
}

namespace detail {

// imaginary parts accept "i", "2i", "1/2i" ((1/2)i), and "i/2"
inline std::optional<double> parse_imag_magnitude(std::string_view text) {
    if (text == "i") return 1.0;
    if (text.size() >= 2 && text.substr(0, 2) == "i/") {
        const auto den = parse_rational(text.substr(2));
        if (!den || *den == 0) return std::nullopt;
        return to_double(Rational(1) / *den);
    }
    if (!text.empty() && text.back() == 'i') {
        const auto coeff = parse_rational(text.substr(0, text.size() - 1));
        if (!coeff) return std::nullopt;
        return to_double(*coeff);
    }
    return std::nullopt;
}

}  // namespace detail

/// Parses "p/q" and decimal forms as exact rationals, and "a+bi" forms
/// (including "i", "-i", "0.5i", "i/2") as complex. Returns nullopt when the
/// text is not wholly a number.
inline std::optional<Scalar> parse_scalar(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.find('i') == std::string_view::npos) {
        const auto value = parse_rational(text);
        if (!value) return std::nullopt;
        return Scalar(*value);
    }

    // split a trailing imaginary term off an optional real part
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        if ((text[pos] == '+' || text[pos] == '-') && text[pos - 1] != 'e' && text[pos - 1] != 'E') {
            split = pos;
        }
    }

    double sign = 1.0;
    std::string_view real_part;
    std::string_view imag_part = text;
    if (split != std::string_view::npos) {
        real_part = text.substr(0, split);
        sign = text[split] == '-' ? -1.0 : 1.0;
        imag_part = text.substr(split + 1);
    } else if (text.front() == '-' || text.front() == '+') {
        sign = text.front() == '-' ? -1.0 : 1.0;
        imag_part = text.substr(1);
    }

    const auto imag = detail::parse_imag_magnitude(imag_part);
    if (!imag) return std::nullopt;
    double real_value = 0.0;
    if (!real_part.empty()) {
        const auto real = parse_rational(real_part);
        if (!real) return std::nullopt;
        real_value = to_double(*real);
    }
    return Scalar(Complex(real_value, sign * *imag));
}

}  // namespace qcalc
