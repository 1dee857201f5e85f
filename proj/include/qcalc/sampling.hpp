#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded, platform-independent sampling of rationals and polynomials
 *        for randomized identity sweeps.
 *
 * std::mt19937_64 output is pinned by the standard; the distributions are
 * hand-rolled here because the standard ones are not, and identical seeds
 * must give byte-identical sweeps everywhere.
 */

#include "qcalc/polynomial.hpp"
#include "qcalc/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qcalc {

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi], rejection-sampled to avoid modulo bias.
    long long uniform(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return lo + static_cast<long long>(draw % span);
    }

    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

    /// Rational with numerator in [-num_range, num_range] and denominator
    /// in [1, max_den].
    Rational rational(long long num_range, long long max_den) {
        return Rational(BigInt(uniform(-num_range, num_range)), BigInt(uniform(1, max_den)));
    }

    /// Nonzero rational in the same box.
    Rational nonzero_rational(long long num_range, long long max_den) {
        Rational value = rational(num_range, max_den);
        while (value == 0) value = rational(num_range, max_den);
        return value;
    }

private:
    std::mt19937_64 engine_;
};

/// Random polynomial of the exact stated degree (leading coefficient
/// nonzero) with coefficients in [-coeff_range, coeff_range].
inline Polynomial random_polynomial(SampleRng& rng, int degree, long long coeff_range,
                                    long long max_den) {
    if (degree < 0) return {};
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = rng.rational(coeff_range, max_den);
    coeffs.back() = rng.nonzero_rational(coeff_range, max_den);
    return Polynomial(std::move(coeffs));
}

/// Random rational q suitable as a deformation parameter: never 1, and
/// optionally excluding 0 and -1 (|q| != 1).
struct QConstraints {
    bool allow_zero = true;
    bool allow_minus_one = true;
};

inline Rational random_q(SampleRng& rng, QConstraints constraints = {}) {
    while (true) {
        Rational q = rng.rational(12, 6);
        if (q == 1) continue;
        if (!constraints.allow_zero && q == 0) continue;
        if (!constraints.allow_minus_one && q == -1) continue;
        return q;
    }
}

}  // namespace qcalc
