#pragma once

/**
 * @file identities.hpp
 * @brief Seeded exact identity sweeps surfaced by the CLI.
 *
 * Each sweep draws random exact inputs and checks an identity with zero
 * tolerance, comparing two independently computed sides.
 */

#include "qcalc/polynomial.hpp"
#include "qcalc/qsymbols.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/sampling.hpp"

#include <cstdint>
#include <string>

namespace qcalc {

struct SweepOutcome {
    long long trials = 0;
    long long failures = 0;
    std::string first_failure;

    void record_failure(const std::string& description) {
        ++failures;
        if (first_failure.empty()) first_failure = description;
    }
};

/// (a;q)_n  ==  sum_k q^(k(k-1)/2) [n k]_q (-a)^k, for |q| != 1, n <= 12.
inline SweepOutcome sweep_gauss_identity(std::uint64_t seed, long long trials) {
    SampleRng rng(seed);
    SweepOutcome outcome;
    for (long long t = 0; t < trials; ++t) {
        ++outcome.trials;
        const int n = static_cast<int>(rng.uniform(0, 12));
        const Rational a = rng.rational(10, 5);
        const Rational q = random_q(rng, {.allow_zero = true, .allow_minus_one = false});

        const Rational lhs = q_pochhammer(a, q, n);
        const auto row = gaussian_binomial_row(n);
        Rational rhs{0};
        Rational neg_a_power{1};  // (-a)^k
        for (int k = 0; k <= n; ++k) {
            const long long choose2 = static_cast<long long>(k) * (k - 1) / 2;
            rhs += rational_pow(q, choose2) * row[static_cast<std::size_t>(k)].evaluate(q) * neg_a_power;
            neg_a_power *= -a;
        }
        if (lhs != rhs) {
            outcome.record_failure("gauss: a=" + to_string(a) + " q=" + to_string(q) +
                                   " n=" + std::to_string(n));
        }
    }
    return outcome;
}

/// The alternating q-binomial sum equals (q^(m-n+1);q)_n for every m >= 0,
/// and specializes to (q;q)_n * delta_mn on 0 <= m <= n.
inline SweepOutcome sweep_alternating_sum(std::uint64_t seed, long long trials) {
    SampleRng rng(seed);
    SweepOutcome outcome;
    for (long long t = 0; t < trials; ++t) {
        ++outcome.trials;
        const int n = static_cast<int>(rng.uniform(1, 12));
        const long long m = rng.uniform(0, 2 * n);
        Rational q = random_q(rng);
        if (q == 0 && m < n - 1) q = Rational(1, 2);  // q = 0 needs m >= n-1

        const Rational lhs = alternating_qbinomial_sum(m, n, q);
        const Rational rhs = q_pochhammer(rational_pow(q, m - n + 1), q, n);
        bool ok = (lhs == rhs);

        // Kronecker specialization across the whole m <= n range
        for (long long mm = 0; ok && mm <= n; ++mm) {
            if (q == 0 && mm < n - 1) continue;
            const Rational sum = alternating_qbinomial_sum(mm, n, q);
            const Rational expected = (mm == n) ? q_pochhammer(q, q, n) : Rational(0);
            ok = (sum == expected);
        }
        if (!ok) {
            outcome.record_failure("sumdelta: m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                   " q=" + to_string(q));
        }
    }
    return outcome;
}

/// The 2-fold q-derivative at q = -1 annihilates every polynomial, hence so
/// does every higher iterate.
inline SweepOutcome sweep_qminus1_collapse(std::uint64_t seed, long long trials) {
    SampleRng rng(seed);
    SweepOutcome outcome;
    const Rational minus_one{-1};
    for (long long t = 0; t < trials; ++t) {
        ++outcome.trials;
        const int degree = static_cast<int>(rng.uniform(0, 8));
        const Polynomial p = random_polynomial(rng, degree, 10, 4);
        const int n = static_cast<int>(rng.uniform(2, 6));
        if (!q_derivative_n(p, minus_one, n).is_zero()) {
            outcome.record_failure("qminus1: p=" + p.to_string() + " n=" + std::to_string(n));
        }
    }
    return outcome;
}

/// Single-sum form == evaluated n-fold iterate, exactly, for q not in {0,1}
/// and x != 0.
inline SweepOutcome sweep_closed_form(std::uint64_t seed, long long trials) {
    SampleRng rng(seed);
    SweepOutcome outcome;
    for (long long t = 0; t < trials; ++t) {
        ++outcome.trials;
        const int degree = static_cast<int>(rng.uniform(0, 8));
        const Polynomial p = random_polynomial(rng, degree, 10, 4);
        const Rational q = random_q(rng, {.allow_zero = false});
        const int n = static_cast<int>(rng.uniform(1, 8));
        const Rational x = rng.nonzero_rational(8, 4);

        const Rational direct = q_derivative_closed_form(p, q, n, x);
        const Rational iterated = q_derivative_n(p, q, n)(x);
        if (direct != iterated) {
            outcome.record_failure("closedform: p=" + p.to_string() + " q=" + to_string(q) +
                                   " n=" + std::to_string(n) + " x=" + to_string(x));
        }
    }
    return outcome;
}

}  // namespace qcalc
