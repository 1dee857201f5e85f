#pragma once

/**
 * @file qoperator.hpp
 * @brief The q-derivative operator on black-box point functions.
 *
 * For q != 1 the operator is
 *
 *     D_q f(x) = (f(x) - f(qx)) / ((1-q)x)   for x != 0,
 *     D_q f(0) = f'(0),
 *
 * and its n-fold iterate at x != 0 collapses to a single weighted sum of
 * samples f(q^k x). The value of the iterate at 0 is c_n(q) f^(n)(0), and
 * estimate_zero_limit checks that the numeric limit of the sum form agrees.
 */

#include "qcalc/jet.hpp"
#include "qcalc/polynomial.hpp"
#include "qcalc/qsymbols.hpp"
#include "qcalc/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcalc {

/// An evaluatable function handle. The evaluator is only ever called with
/// arguments of magnitude below the domain radius. The jet oracle, when
/// present, must expand the same function; it supplies the derivative
/// information the x = 0 and q = 0 branches need.
template <ScalarType T>
struct PointFn {
    std::function<T(const T&)> evaluate;
    double radius = std::numeric_limits<double>::infinity();
    std::function<Jet<T>(const T&, int)> jet_at;  // (center, order) -> jet; may be empty

    bool has_jet_oracle() const { return static_cast<bool>(jet_at); }
};

/// Lifts an exact polynomial to a point function with a jet oracle.
template <ScalarType T>
PointFn<T> point_fn_from_polynomial(const Polynomial& p) {
    PointFn<T> f;
    f.evaluate = [p](const T& x) { return p.taylor_jet(x, 0).coeff(0); };
    f.jet_at = [p](const T& center, int order) { return p.taylor_jet(center, order); };
    return f;
}

namespace detail {

template <ScalarType T>
void check_in_domain(const PointFn<T>& f, const T& argument) {
    if (!(magnitude(argument) < f.radius)) {
        throw std::domain_error("argument outside the function's domain radius");
    }
}

template <ScalarType T>
Jet<T> jet_at_zero(const PointFn<T>& f, int order, const char* why) {
    if (!f.has_jet_oracle()) {
        throw std::domain_error(std::string("derivative oracle required ") + why);
    }
    return f.jet_at(from_int<T>(0), order);
}

}  // namespace detail

/// D_q f at a point, straight from the definition.
template <ScalarType T>
T q_derivative_at(const PointFn<T>& f, const T& q, const T& x) {
    if (is_one(q)) throw std::domain_error("q must not equal 1");
    if (is_zero(x)) {
        return detail::jet_at_zero(f, 1, "to evaluate at x = 0").derivative(1);
    }
    detail::check_in_domain(f, x);
    detail::check_in_domain(f, q * x);
    const T one = from_int<T>(1);
    return (f.evaluate(x) - f.evaluate(q * x)) / ((one - q) * x);
}

/// The n-fold q-derivative at a point.
///
/// x != 0, q != 0: the single-sum form over samples f(q^k x), k = 0..n.
/// x != 0, q  = 0: the Taylor-remainder form, which needs f^(k)(0) for k < n.
/// x  = 0:         the order-0 coefficient of the series action on the jet.
template <ScalarType T>
T q_derivative_n_at(const PointFn<T>& f, const T& q, int n, const T& x) {
    if (n < 1) throw std::invalid_argument("q_derivative_n_at requires n >= 1");
    if (is_one(q)) throw std::domain_error("q must not equal 1");

    if (is_zero(x)) {
        PowerSeries<T> s(detail::jet_at_zero(f, n, "to evaluate at x = 0"), f.radius);
        return series_q_derivative(s, q, n).coeff(0);
    }

    if (is_zero(q)) {
        detail::check_in_domain(f, x);
        T remainder = f.evaluate(x);
        if (n == 1) {
            // (f(x) - f(0)) / x needs no derivative information
            remainder -= f.evaluate(from_int<T>(0));
        } else {
            const Jet<T> jet = detail::jet_at_zero(f, n - 1, "for the q = 0 branch");
            T x_power = from_int<T>(1);
            for (int k = 0; k < n; ++k) {
                remainder -= jet.coeff(k) * x_power;
                x_power *= x;
            }
        }
        return remainder / int_pow(x, static_cast<long long>(n));
    }

    T scaled = x;
    detail::check_in_domain(f, scaled);
    for (int k = 1; k <= n; ++k) {
        scaled *= q;
        detail::check_in_domain(f, scaled);
    }

    // the alternating sum cancels almost completely near 0, so the floating
    // kinds accumulate with Neumaier compensation to keep the rounding of
    // partial sums out of the cancellation floor
    const auto row = gaussian_binomial_row(n);
    T sum = from_int<T>(0);
    T compensation = from_int<T>(0);
    T q_power_k = from_int<T>(1);  // q^k
    for (int k = 0; k <= n; ++k) {
        const long long exponent =
            -static_cast<long long>(k) * (n - 1) + static_cast<long long>(k) * (k - 1) / 2;
        const T weight = int_pow(q, exponent) * row[static_cast<std::size_t>(k)].evaluate(q);
        const T term_raw = weight * f.evaluate(q_power_k * x);
        const T term = (k & 1) ? -term_raw : term_raw;
        if constexpr (is_exact_kind_v<T>) {
            sum += term;
        } else {
            const T updated = sum + term;
            if (magnitude(sum) >= magnitude(term)) {
                compensation += (sum - updated) + term;
            } else {
                compensation += (term - updated) + sum;
            }
            sum = updated;
        }
        q_power_k *= q;
    }
    const T one = from_int<T>(1);
    return (sum + compensation) /
           (int_pow(one - q, static_cast<long long>(n)) * int_pow(x, static_cast<long long>(n)));
}

// The sample lattice descends by 1/sqrt(2) per step. A coarser ratio (1/2)
// multiplies the x^-n cancellation noise by 2^n per step and jumps straight
// over the accuracy optimum for n around 5; the finer lattice lands close
// enough to the optimum to meet the n = 5 tolerance with an order of margin.
inline constexpr double kDefaultSampleRatio = 0.70710678118654752;

// TODO: an opt-in extended-precision sample kind (long double) would push
// the cancellation floor down ~3 digits for tolerances the binary64 ladder
// cannot reach.
struct LimitOptions {
    double x0 = 0.0;  // 0 = automatic: 1 for entire functions, else 0.4*radius,
                      // shrunk by |q|^n when |q| > 1
    double ratio = kDefaultSampleRatio;  // geometric step between samples, in (0,1)
    int max_steps = 40;
    double tol = 0.0;  // 0 = automatic (n-dependent)
};

template <ScalarType T>
struct LimitReport {
    T estimate = from_int<T>(0);
    double uncertainty = std::numeric_limits<double>::infinity();
    std::vector<std::pair<T, T>> samples;  // (x_j, D_q^n f(x_j)), |x_j| strictly decreasing
    bool converged = false;
};

/// Relative tolerance at which verify_zero_limit accepts, by derivative
/// order. The ladder tracks the binary64 cancellation floor of the sum form.
inline double default_pass_tolerance(int n) {
    if (n <= 2) return 1e-6;
    if (n <= 4) return 1e-4;
    if (n == 5) return 1e-3;
    return 1e-2;
}

inline double default_limit_tolerance(int n) {
    return default_pass_tolerance(n) / 10.0;
}

/// Estimates lim_{x->0} D_q^n f(x) from samples x_j = x0 * ratio^j with a
/// three-level Richardson tableau (error ansatz A1*x + A2*x^2 + ...). At every
/// step each tableau level offers (extrapolant, disagreement with its
/// predecessor); the estimate with the smallest observed disagreement wins.
/// Stops when some level agrees within tol*(1+|estimate|), or when the
/// disagreement grows persistently past the best seen -- the cancellation
/// floor -- in which case the best estimate is reported with
/// converged = false.
template <ScalarType T>
LimitReport<T> estimate_zero_limit(const PointFn<T>& f, const T& q, int n, LimitOptions opts = {}) {
    if (n < 1) throw std::invalid_argument("estimate_zero_limit requires n >= 1");
    if (is_one(q)) throw std::domain_error("q must not equal 1");
    if (!(opts.ratio > 0.0 && opts.ratio < 1.0)) {
        throw std::invalid_argument("ratio must lie strictly between 0 and 1");
    }
    if (opts.max_steps < 3) throw std::invalid_argument("max_steps must be at least 3");

    const double qmag = magnitude(q);
    double x0 = opts.x0;
    if (x0 == 0.0) {
        // entire functions start at 1 (smaller starts just sit deeper in the
        // x^-n cancellation noise); radius-limited ones back off to 0.4*rho
        x0 = std::isinf(f.radius) ? 1.0 : 0.4 * std::min(f.radius, 1.0);
        if (qmag > 1.0) x0 /= std::pow(qmag, n);
    } else if (!(x0 > 0.0)) {
        throw std::invalid_argument("x0 must be positive");
    }
    if (!(x0 * std::pow(std::max(qmag, 1.0), n) < f.radius)) {
        throw std::domain_error("x0 places sample points outside the domain radius");
    }
    const double tol = opts.tol > 0.0 ? opts.tol : default_limit_tolerance(n);

    LimitReport<T> report;
    const T one = from_int<T>(1);
    const T ratio = from_rational<T>(Rational(opts.ratio));  // exact value of the double

    constexpr int kTableauLevels = 3;
    std::vector<std::vector<T>> columns(kTableauLevels + 1);
    columns[0].reserve(static_cast<std::size_t>(opts.max_steps));
    T ratio_powers[kTableauLevels + 1];
    ratio_powers[0] = one;
    for (int level = 1; level <= kTableauLevels; ++level) ratio_powers[level] = ratio_powers[level - 1] * ratio;

    T best_estimate = from_int<T>(0);
    double best_delta = std::numeric_limits<double>::infinity();
    bool have_best = false;
    int rising_steps = 0;

    double x_current = x0;
    for (int j = 0; j < opts.max_steps; ++j) {
        const T x = from_rational<T>(Rational(x_current));
        const T value = q_derivative_n_at(f, q, n, x);
        report.samples.emplace_back(x, value);
        columns[0].push_back(value);
        x_current *= opts.ratio;

        // level l removes the x^l error term from level l-1
        for (int level = 1; level <= kTableauLevels; ++level) {
            const auto& prev = columns[static_cast<std::size_t>(level - 1)];
            if (prev.size() < 2) break;
            columns[static_cast<std::size_t>(level)].push_back(
                (prev[prev.size() - 1] - ratio_powers[level] * prev[prev.size() - 2]) /
                (one - ratio_powers[level]));
        }

        // fresh disagreement measurements at each level; smallest wins
        double step_best_delta = std::numeric_limits<double>::infinity();
        const T* step_best_estimate = nullptr;
        for (int level = 1; level <= kTableauLevels; ++level) {
            const auto& column = columns[static_cast<std::size_t>(level)];
            if (column.size() < 2) break;
            const T& candidate = column.back();
            const double delta = magnitude(candidate - column[column.size() - 2]);
            if (delta < step_best_delta) {
                step_best_delta = delta;
                step_best_estimate = &candidate;
            }
        }
        if (step_best_estimate == nullptr) continue;

        if (!have_best || step_best_delta < best_delta) {
            best_delta = step_best_delta;
            best_estimate = *step_best_estimate;
            have_best = true;
            rising_steps = 0;
        } else if (step_best_delta > 8.0 * best_delta) {
            // well past the best agreement seen: the cancellation floor
            if (++rising_steps >= 3) break;
        }
        if (step_best_delta <= tol * (1.0 + magnitude(*step_best_estimate))) {
            report.estimate = *step_best_estimate;
            report.uncertainty = step_best_delta;
            report.converged = true;
            return report;
        }
    }

    if (have_best) {
        report.estimate = best_estimate;
        report.uncertainty = best_delta;
    } else if (!columns[0].empty()) {
        report.estimate = columns[0].back();
    }
    report.converged = false;
    return report;
}

template <ScalarType T>
struct VerifyReport {
    LimitReport<T> limit;
    T predicted = from_int<T>(0);
    double abs_err = std::numeric_limits<double>::quiet_NaN();
    double rel_err = std::numeric_limits<double>::quiet_NaN();
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares the numeric limit of D_q^n f at 0 against the prediction
/// c_n(q) * f^(n)(0) taken from the jet oracle. pass holds iff the relative
/// error is within the (n-dependent) tolerance; the embedded report's
/// converged flag states whether the measured uncertainty met that same
/// tolerance.
template <ScalarType T>
VerifyReport<T> verify_zero_limit(const PointFn<T>& f, const T& q, int n, LimitOptions opts = {},
                                  double pass_tolerance = 0.0) {
    if (n < 1) throw std::invalid_argument("verify_zero_limit requires n >= 1");
    const Jet<T> jet = detail::jet_at_zero(f, n, "to predict the limit");

    VerifyReport<T> report;
    report.tolerance = pass_tolerance > 0.0 ? pass_tolerance : default_pass_tolerance(n);
    // run the estimator to its cancellation floor for the best estimate,
    // then judge convergence at the verification tolerance
    if (opts.tol == 0.0) opts.tol = 1e-13;
    report.predicted = qderiv_zero_factor(n, q) * jet.derivative(n);
    report.limit = estimate_zero_limit(f, q, n, opts);
    report.limit.converged =
        report.limit.uncertainty <= report.tolerance * (1.0 + magnitude(report.limit.estimate));
    report.abs_err = magnitude(report.limit.estimate - report.predicted);
    const double predicted_magnitude = magnitude(report.predicted);
    // a prediction of exactly 0 degenerates the relative error; fall back to
    // the absolute error at unit scale
    report.rel_err = predicted_magnitude > 0.0 ? report.abs_err / predicted_magnitude : report.abs_err;
    report.pass = report.rel_err <= report.tolerance;
    return report;
}

}  // namespace qcalc
