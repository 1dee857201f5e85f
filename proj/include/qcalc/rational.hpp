#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and rationals.
 *
 * Rationals are kept in lowest terms with a positive denominator (the
 * canonical form maintained by boost::multiprecision). All exact paths in
 * the library run on these types.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcalc {

// expression templates disabled so arithmetic yields plain values, as the
// kind-generic templates expect
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline double to_double(const Rational& value) {
    return value.template convert_to<double>();
}

inline BigInt int_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    BigInt result{1};
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

/// base^exponent for integer exponents; negative exponents invert.
/// 0^0 = 1 (empty product), 0^negative is rejected.
inline Rational rational_pow(const Rational& base, long long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0) {
        if (exponent < 0) throw std::domain_error("negative power of zero");
        return Rational(0);
    }
    const auto magnitude = static_cast<unsigned long long>(
        exponent < 0 ? -(exponent + 1) + 1ULL : exponent);
    if (magnitude > (1ULL << 31)) throw std::invalid_argument("power exponent out of range");
    BigInt num = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(magnitude));
    BigInt den = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(magnitude));
    // inputs are canonical, so num/den is already in lowest terms; keep the
    // denominator positive after inverting
    if (exponent < 0) {
        num.swap(den);
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    return Rational(num, den);
}

/// Renders in the canonical text form: "p" or "p/q".
inline std::string to_string(const Rational& value) {
    std::string text = numerator(value).str();
    if (denominator(value) != 1) {
        text += "/";
        text += denominator(value).str();
    }
    return text;
}

namespace detail {

// avoids the octal interpretation of leading zeros in the string ctor
inline BigInt bigint_from_digits(std::string digits) {
    const std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(digits.substr(first));
}

}  // namespace detail

/// Parses "p", "p/q", and decimal forms ("0.25", "1e-3", "-2.5e2"), all
/// converted exactly. Returns nullopt if the text is not wholly a number.
inline std::optional<Rational> parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
    const auto take_digits = [&]() -> std::string {
        std::string digits;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];
        return digits;
    };

    bool negative = false;
    if (peek() == '+' || peek() == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }

    std::string int_part = take_digits();
    std::string frac_part;
    bool has_point = false;
    if (peek() == '.') {
        has_point = true;
        ++pos;
        frac_part = take_digits();
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;

    if (!has_point && peek() == '/') {
        ++pos;
        std::string den_digits = take_digits();
        if (den_digits.empty() || pos != text.size()) return std::nullopt;
        BigInt den = detail::bigint_from_digits(den_digits);
        if (den == 0) return std::nullopt;
        Rational value{detail::bigint_from_digits(int_part), den};
        return negative ? Rational(-value) : value;
    }

    long long exponent = 0;
    if (peek() == 'e' || peek() == 'E') {
        ++pos;
        bool exp_negative = false;
        if (peek() == '+' || peek() == '-') {
            exp_negative = (text[pos] == '-');
            ++pos;
        }
        std::string exp_digits = take_digits();
        if (exp_digits.empty() || exp_digits.size() > 6) return std::nullopt;
        exponent = std::strtoll(exp_digits.c_str(), nullptr, 10);
        if (exp_negative) exponent = -exponent;
    }
    if (pos != text.size()) return std::nullopt;

    BigInt mantissa = detail::bigint_from_digits(int_part + frac_part);
    long long scale = exponent - static_cast<long long>(frac_part.size());
    Rational value{mantissa};
    value *= rational_pow(Rational(10), scale);
    return negative ? Rational(-value) : value;
}

}  // namespace qcalc
