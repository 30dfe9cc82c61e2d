#pragma once

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "bignum.hpp"
#include "errors.hpp"

namespace iterate_census {

/// C(n, k) for 0 <= k <= n, and 0 for every other integer pair.
/// The zero extension lets every finite sum in the census run to a fixed bound.
inline BigNat binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return BigNat{};
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigNat(std::move(r));
}

namespace detail {

// Append-only memo of Catalan numbers. Entries are never moved once pushed
// (std::deque), so references handed out stay valid while writers append.
class CatalanTable {
public:
    static CatalanTable& instance() {
        static CatalanTable table;
        return table;
    }

    const BigNat& get(long n) {
        const auto idx = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mutex_);
            if (idx < values_.size()) return values_[idx];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= idx) {
            const auto m = static_cast<long>(values_.size());
            // S_m = C(2m, m) / (m + 1), exactly.
            BigInt central = binomial(2 * m, m).value();
            BigInt q, rem;
            mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), central.get_mpz_t(),
                           static_cast<unsigned long>(m + 1));
            if (sgn(rem) != 0) {
                throw ConsistencyError("catalan: C(2n,n) not divisible by n+1 at n=" +
                                       std::to_string(m));
            }
            values_.emplace_back(std::move(q));
        }
        return values_[idx];
    }

private:
    CatalanTable() = default;
    std::shared_mutex mutex_;
    std::deque<BigNat> values_;
};

}  // namespace detail

/// Catalan number S_n = C(2n, n)/(n + 1); memoized and safe to call concurrently.
inline const BigNat& catalan(long n) {
    detail::require(n >= 0, "catalan: negative order " + std::to_string(n));
    return detail::CatalanTable::instance().get(n);
}

/// S_n when n >= 0, otherwise 0. Used where the census sums index S at n - nu.
inline BigNat catalan_or_zero(long n) { return n < 0 ? BigNat{} : catalan(n); }

/// S_k - 2(2k-1)/(k+1) * S_{k-1}; zero for every k >= 1.
inline BigRat catalan_recursion_residual(long k) {
    detail::require(k >= 1, "catalan_recursion_residual: k must be >= 1, got " +
                                std::to_string(k));
    const BigRat factor(BigInt(2 * (2 * k - 1)), BigInt(k + 1));
    return BigRat(catalan(k)) - factor * BigRat(catalan(k - 1));
}

}  // namespace iterate_census
