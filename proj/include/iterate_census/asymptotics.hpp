#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "exact_arith.hpp"

namespace iterate_census {

/// I^AB_n / S_n^2 as an exact rational, from the closed series.
inline BigRat reducible_fraction(long n, long cap = kDefaultClosedFormCap) {
    detail::require(n >= 2, "reducible_fraction: n must be >= 2");
    detail::require_cap(n, cap, "closed form order");
    const BigNat& s = catalan(n);
    return reducible_count_ab_series(n) / BigRat(s * s);
}

/// (S_n^2 - I^AB_n) / S_n^2, exactly.
inline BigRat irreducible_fraction(long n, long cap = kDefaultClosedFormCap) {
    return BigRat(1) - reducible_fraction(n, cap);
}

inline double exact_ratio(long n, long cap = kDefaultClosedFormCap) {
    return to_double(reducible_fraction(n, cap));
}

/// (n+2)/n * (1 - e^(-n/16)).
inline double estimate_ratio(long n) {
    detail::require(n >= 1, "estimate_ratio: n must be >= 1");
    const double x = static_cast<double>(n);
    return (x + 2.0) / x * -std::expm1(-x / 16.0);
}

/// |(n+2)/n * e^(-n/16) - 2/n|.
inline double theorem_bound_ratio(long n) {
    detail::require(n >= 1, "theorem_bound_ratio: n must be >= 1");
    const double x = static_cast<double>(n);
    return std::fabs((x + 2.0) / x * std::exp(-x / 16.0) - 2.0 / x);
}

struct AsymptoticRow {
    long n = 0;
    double exact_ratio = 0;
    double estimate_ratio = 0;
    double irreducible_exact_ratio = 0;
    double theorem_bound_ratio = 0;
};

inline AsymptoticRow asymptotic_row(long n, long cap = kDefaultClosedFormCap) {
    const BigRat reducible = reducible_fraction(n, cap);
    return AsymptoticRow{n, to_double(reducible), estimate_ratio(n),
                         to_double(BigRat(1) - reducible), theorem_bound_ratio(n)};
}

/// One term of the normalized series for I^AB_n / ((n+2) S_n^2) next to the
/// replacement used by the limit argument. Magnitudes are unsigned; `sign` is
/// (-1)^(k-1).
struct TermComparison {
    long k = 0;
    int sign = 1;
    double exact_term = 0;
    double heuristic_term = 0;
};

/// For k = 1..k_max: exact (1/k) C(n-k+1, k-1) (S_(n-k)/S_n)^2 against
/// n^(k-1) / (k! 16^k).
inline std::vector<TermComparison> term_comparison(long n, long k_max) {
    detail::require(k_max >= 1 && 2 * k_max <= n,
                    "term_comparison: k_max must lie in 1..n/2, got " + std::to_string(k_max));
    std::vector<TermComparison> out;
    const BigNat& sn = catalan(n);
    const BigRat sn2(sn * sn);
    for (long k = 1; k <= k_max; ++k) {
        const BigNat c = binomial(n - k + 1, k - 1);
        const BigNat& snk = catalan_or_zero(n - k);
        const BigRat exact = BigRat(c * snk * snk) / (BigRat(BigInt(k)) * sn2);
        const double log_heuristic = static_cast<double>(k - 1) * std::log(static_cast<double>(n)) -
                                     std::lgamma(static_cast<double>(k) + 1.0) -
                                     static_cast<double>(k) * std::log(16.0);
        out.push_back({k, (k % 2 == 1) ? 1 : -1, to_double(exact), std::exp(log_heuristic)});
    }
    return out;
}

}  // namespace iterate_census
