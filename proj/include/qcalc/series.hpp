#pragma once

/**
 * @file series.hpp
 * @brief The action of the n-fold q-derivative on truncated power series
 *        centered at 0.
 */

#include "qcalc/jet.hpp"
#include "qcalc/qsymbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcalc {

/// A jet centered at 0 together with a domain radius (possibly infinite).
template <ScalarType T>
class PowerSeries {
public:
    PowerSeries(Jet<T> jet, double radius) : jet_(std::move(jet)), radius_(radius) {
        if (!is_zero(jet_.center())) throw std::invalid_argument("power series must be centered at 0");
        if (!(radius_ > 0.0)) throw std::invalid_argument("domain radius must be positive");
    }

    const Jet<T>& jet() const { return jet_; }
    double radius() const { return radius_; }
    int order() const { return jet_.order(); }
    const T& coeff(int m) const { return jet_.coeff(m); }

private:
    Jet<T> jet_;
    double radius_;
};

/// Domain radius of the n-fold q-derivative of a series with radius rho:
/// rho itself when q = 0, otherwise min(rho, rho/|q|^n).
template <ScalarType T>
double q_scaled_radius(double rho, const T& q, int n) {
    if (!(rho > 0.0)) throw std::invalid_argument("domain radius must be positive");
    if (n < 0) throw std::invalid_argument("q_scaled_radius requires n >= 0");
    if (is_zero(q)) return rho;
    if (std::isinf(rho)) return rho;
    const double qn = std::pow(magnitude(q), n);
    return std::min(rho, rho / qn);
}

/// Coefficients of the n-fold q-derivative:
///   b_j = a_(j+n) * (q^(j+1); q)_n / (1-q)^n = a_(j+n) * [j+1]_q ... [j+n]_q.
/// The q-integer product form keeps every q != 1 (including 0 and -1) exact.
/// The output order drops by exactly n; the radius follows q_scaled_radius.
template <ScalarType T>
PowerSeries<T> series_q_derivative(const PowerSeries<T>& s, const T& q, int n) {
    if (n < 1) throw std::invalid_argument("series_q_derivative requires n >= 1");
    if (is_one(q)) throw std::domain_error("q must not equal 1");
    if (n > s.order()) throw std::invalid_argument("n exceeds the series order");
    std::vector<T> out(static_cast<std::size_t>(s.order() - n) + 1, from_int<T>(0));
    for (int j = 0; j <= s.order() - n; ++j) {
        T factor = from_int<T>(1);
        for (int t = j + 1; t <= j + n; ++t) factor *= q_integer(t, q);
        out[static_cast<std::size_t>(j)] = s.coeff(j + n) * factor;
    }
    return PowerSeries<T>(Jet<T>(from_int<T>(0), std::move(out)), q_scaled_radius(s.radius(), q, n));
}

}  // namespace qcalc
