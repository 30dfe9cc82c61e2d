#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"
#include "exact_arith.hpp"
#include "index_set.hpp"
#include "iterate_tree.hpp"
#include "parallel.hpp"
#include "tableau.hpp"

namespace iterate_census {

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Number of order-n iterates with multiplicity k in A_n:
/// 2^(n-2k+1) * C(n-1, 2k-2) * S_(k-1).
/// The power of two is evaluated only when the binomial is nonzero, which is
/// exactly when its exponent is non-negative.
inline BigNat t_nk(long n, long k) {
    detail::require(n >= 1, "t_nk: n must be >= 1, got " + std::to_string(n));
    BigNat c = binomial(n - 1, 2 * k - 2);
    if (c.is_zero()) return c;
    BigInt pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 2 * k + 1));
    return BigNat(pow2) * c * catalan(k - 1);
}

/// Multiplicity-k count in A_n ⊕ B_n as T(n,k) + 2T(n-1,k-1) - 2T(n-1,k).
inline BigInt t_nk_combined_by_difference(long n, long k) {
    detail::require(n >= 2, "t_nk_combined: n must be >= 2, got " + std::to_string(n));
    return t_nk(n, k).value() + 2 * t_nk(n - 1, k - 1).value() - 2 * t_nk(n - 1, k).value();
}

/// Multiplicity-k count in A_n ⊕ B_n as (n+2)/k * T(n-1,k-1).
inline BigRat t_nk_combined_by_ratio(long n, long k) {
    detail::require(n >= 2, "t_nk_combined: n must be >= 2, got " + std::to_string(n));
    detail::require(k >= 1, "t_nk_combined: k must be >= 1, got " + std::to_string(k));
    return BigRat(BigInt(n + 2), BigInt(k)) * BigRat(t_nk(n - 1, k - 1));
}

/// Evaluates both forms of the A_n ⊕ B_n multiplicity count and returns the
/// common value; throws ConsistencyError if they differ or the ratio form is
/// not integral.
inline BigNat t_nk_combined(long n, long k) {
    const BigInt diff = t_nk_combined_by_difference(n, k);
    const BigRat ratio = t_nk_combined_by_ratio(n, k);
    if (!ratio.is_integer() || ratio.numerator() != diff) {
        throw ConsistencyError("t_nk_combined(" + std::to_string(n) + "," + std::to_string(k) +
                               "): difference form " + diff.get_str() + " != ratio form " +
                               ratio.str());
    }
    return BigNat(diff);
}

/// Size of the union of M lines that pairwise intersect in S_(n-2), triple-wise
/// in S_(n-3), and so on: sum_{nu>=1} (-1)^(nu-1) C(M,nu) S_(n-nu).
inline BigNat row_reducible_count(long n, long multiplicity) {
    detail::require(n >= 1, "row_reducible_count: n must be >= 1");
    detail::require(multiplicity >= 0, "row_reducible_count: negative multiplicity");
    BigInt sum = 0;
    BigInt c = 1;  // C(multiplicity, nu), updated incrementally
    for (long nu = 1; nu <= std::min(n, multiplicity); ++nu) {
        c *= multiplicity - nu + 1;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(nu));
        BigInt term = c * catalan(n - nu).value();
        if (nu % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return BigNat(sum);
}

/// sum_{nu>=0} C(k+nu, k) T(n, k+nu) - C(n-k+1, k) S_(n-k). Always zero.
inline BigRat moment_identity_residual(long n, long k) {
    detail::require(n >= 1, "moment_identity_residual: n must be >= 1");
    detail::require(k >= 0 && k <= n, "moment_identity_residual: k outside 0..n");
    BigNat lhs;
    for (long nu = 0; k + nu <= n + 2; ++nu) {
        lhs += binomial(k + nu, k) * t_nk(n, k + nu);
    }
    const BigNat rhs = binomial(n - k + 1, k) * catalan(n - k);
    return BigRat(lhs) - BigRat(rhs);
}

/// I_n for A_n, pooled by multiplicity: sum_k T(n,k) * row(n,k).
inline BigNat reducible_count_closed_A(long n) {
    detail::require(n >= 1, "reducible_count_closed_A: n must be >= 1");
    BigNat total;
    for (long k = 1; k <= n; ++k) total += t_nk(n, k) * row_reducible_count(n, k);
    return total;
}

/// I_n for A_n ⊕ B_n pooled by multiplicity: sum_k T^AB(n,k) * row(n,k).
inline BigNat reducible_count_ab_by_classes(long n) {
    detail::require(n >= 2, "reducible_count_closed_AB: n must be >= 2");
    BigNat total;
    for (long k = 1; k <= n + 2; ++k) {
        BigNat t = t_nk_combined(n, k);
        if (!t.is_zero()) total += t * row_reducible_count(n, k);
    }
    return total;
}

/// I_n for A_n ⊕ B_n as the single series
/// (n+2) * sum_{nu>=0} (-1)^nu / (nu+1) * C(n-nu, nu) * S_(n-nu-1)^2.
inline BigRat reducible_count_ab_series(long n) {
    detail::require(n >= 2, "reducible_count_closed_AB: n must be >= 2");
    BigRat sum;
    for (long nu = 0; 2 * nu <= n; ++nu) {
        const BigNat c = binomial(n - nu, nu);
        if (c.is_zero()) continue;
        const BigNat& s = catalan(n - nu - 1);
        BigInt num = c.value() * s.value() * s.value();
        if (nu % 2 == 1) num = -num;
        sum += BigRat(num, BigInt(nu + 1));
    }
    return BigRat(BigInt(n + 2)) * sum;
}

/// I_n for A_n ⊕ B_n, evaluated by both closed routes; throws ConsistencyError
/// if they disagree or the series is not integral.
inline BigNat reducible_count_closed_AB(long n) {
    const BigNat pooled = reducible_count_ab_by_classes(n);
    const BigRat series = reducible_count_ab_series(n);
    if (series != BigRat(pooled)) {
        throw ConsistencyError("reducible_count_closed_AB(" + std::to_string(n) +
                               "): pooled form " + pooled.str() + " != series form " +
                               series.str());
    }
    return pooled;
}

// ---------------------------------------------------------------------------
// Brute force over constructed tableaux
// ---------------------------------------------------------------------------

inline constexpr long kDefaultClosedFormCap = 2000;
inline constexpr int kDefaultBruteForceCap = 9;
inline constexpr int kExtendedBruteForceCap = 10;

/// Union of all lines of `t` containing the iterate at enumeration position `pos`.
inline IndexSet reducible_partners(const Tableau& t, std::size_t pos) {
    IndexSet acc(t.index().size());
    for (const Line& line : t.lines()) {
        if (line.set.contains(pos)) acc |= line.set;
    }
    return acc;
}

/// |union of lines containing J|: the number of j with δ(J, J_j) = 1.
inline BigNat reducible_row_size(const Tableau& t, IterateTree j) {
    const std::size_t pos = t.index().position(j);
    return BigNat(static_cast<unsigned long>(reducible_partners(t, pos).count()));
}

/// Number of ordered pairs (i, j), i = j included, whose iterates share a line,
/// computed as sum_i |union of lines containing J_i|.
inline BigNat brute_force_reducible_count(const Tableau& t, int cap = kDefaultBruteForceCap,
                                          unsigned workers = 1) {
    detail::require_cap(t.order(), cap, "brute force order");
    const std::size_t count = t.index().size();
    std::vector<std::uint64_t> partial(std::max(1U, workers), 0);
    detail::parallel_chunks(count, workers, [&](std::size_t chunk, std::size_t begin,
                                                std::size_t end) {
        IndexSet acc(count);
        std::uint64_t sum = 0;
        for (std::size_t pos = begin; pos < end; ++pos) {
            acc.clear();
            for (const Line& line : t.lines()) {
                if (line.set.contains(pos)) acc |= line.set;
            }
            sum += acc.count();
        }
        partial[chunk] = sum;
    });
    BigNat total;
    for (std::uint64_t p : partial) total += BigNat(static_cast<unsigned long long>(p));
    return total;
}

inline constexpr int kIncidenceMatrixCap = 6;

/// δ matrix under the canonical enumeration order; entry (i, j) is 1 when
/// J_i and J_j share a line.
inline std::vector<std::vector<int>> incidence_matrix(const Tableau& t) {
    detail::require_cap(t.order(), kIncidenceMatrixCap, "incidence matrix order");
    const std::size_t count = t.index().size();
    std::vector<std::vector<int>> m(count, std::vector<int>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        const IndexSet partners = reducible_partners(t, i);
        for (std::size_t j = 0; j < count; ++j) m[i][j] = partners.contains(j) ? 1 : 0;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

enum class CensusMode { Brute, Closed, Both };

inline std::string_view mode_name(CensusMode m) {
    switch (m) {
        case CensusMode::Brute: return "brute";
        case CensusMode::Closed: return "closed";
        case CensusMode::Both: return "both";
    }
    return "?";
}

inline CensusMode parse_mode(std::string_view text) {
    if (text == "brute") return CensusMode::Brute;
    if (text == "closed") return CensusMode::Closed;
    if (text == "both") return CensusMode::Both;
    throw ArgumentError("unknown census mode '" + std::string(text) +
                        "' (expected brute, closed or both)");
}

/// How a reported value was obtained.
enum class Provenance { Brute, Closed, BothAgree };

inline std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Brute: return "brute";
        case Provenance::Closed: return "closed";
        case Provenance::BothAgree: return "both-agree";
    }
    return "?";
}

struct CensusReport {
    int n = 0;
    BigNat catalan_n;
    std::map<int, BigNat> t_a;
    std::map<int, BigNat> t_ab;
    BigNat reducible_a;
    BigNat reducible_ab;
    Provenance method = Provenance::Closed;

    [[nodiscard]] BigNat total_identities() const { return catalan_n * catalan_n; }
    [[nodiscard]] BigNat irreducible_a() const { return total_identities() - reducible_a; }
    [[nodiscard]] BigNat irreducible_ab() const { return total_identities() - reducible_ab; }
};

struct CensusOptions {
    int enumeration_cap = kDefaultEnumerationCap;
    int brute_cap = kDefaultBruteForceCap;
    long closed_cap = kDefaultClosedFormCap;
    unsigned workers = 1;
};

namespace detail {

inline std::map<int, BigNat> closed_row(long n, bool combined) {
    std::map<int, BigNat> row;
    for (long k = 1; k <= n + 2; ++k) {
        BigNat v = combined ? t_nk_combined(n, k) : t_nk(n, k);
        if (!v.is_zero()) row.emplace(static_cast<int>(k), std::move(v));
    }
    return row;
}

// First k at which two histogram rows differ, if any.
inline std::optional<int> first_difference(const std::map<int, BigNat>& a,
                                           const std::map<int, BigNat>& b) {
    std::optional<int> witness;
    auto consider = [&](int k) {
        auto ia = a.find(k);
        auto ib = b.find(k);
        const BigNat va = ia == a.end() ? BigNat{} : ia->second;
        const BigNat vb = ib == b.end() ? BigNat{} : ib->second;
        if (va != vb && (!witness || k < *witness)) witness = k;
    };
    for (const auto& [k, v] : a) consider(k);
    for (const auto& [k, v] : b) consider(k);
    return witness;
}

inline std::string row_value(const std::map<int, BigNat>& row, int k) {
    auto it = row.find(k);
    return it == row.end() ? "0" : it->second.str();
}

}  // namespace detail

/// Fills a CensusReport by brute force, closed forms, or both. In `Both` mode
/// every value is cross-checked and a disagreement throws ConsistencyError
/// naming the first offending (n, k) or count.
inline CensusReport run_census(int n, CensusMode mode, const CensusOptions& opts = {}) {
    detail::require(n >= 2, "run_census: n must be >= 2, got " + std::to_string(n));
    if (mode != CensusMode::Closed) {
        detail::require_cap(n, opts.brute_cap, "brute force order");
        detail::require_cap(n, opts.enumeration_cap, "enumeration order");
    } else {
        detail::require_cap(n, opts.closed_cap, "closed form order");
    }

    CensusReport report;
    report.n = n;
    report.catalan_n = catalan(n);

    CensusReport brute;
    if (mode != CensusMode::Closed) {
        const BuildOptions build{opts.enumeration_cap, opts.workers};
        const Tableau a = build_tableau_A(n, build);
        const Tableau ab = direct_sum(a, build_tableau_B(n, build));
        auto ha = multiplicity_histogram(a);
        auto hab = multiplicity_histogram(ab);
        brute.t_a = std::move(ha.counts);
        brute.t_ab = std::move(hab.counts);
        brute.reducible_a = brute_force_reducible_count(a, opts.brute_cap, opts.workers);
        brute.reducible_ab = brute_force_reducible_count(ab, opts.brute_cap, opts.workers);
    }

    CensusReport closed;
    if (mode != CensusMode::Brute) {
        closed.t_a = detail::closed_row(n, false);
        closed.t_ab = detail::closed_row(n, true);
        closed.reducible_a = reducible_count_closed_A(n);
        closed.reducible_ab = reducible_count_closed_AB(n);
    }

    switch (mode) {
        case CensusMode::Brute:
            report.t_a = std::move(brute.t_a);
            report.t_ab = std::move(brute.t_ab);
            report.reducible_a = brute.reducible_a;
            report.reducible_ab = brute.reducible_ab;
            report.method = Provenance::Brute;
            break;
        case CensusMode::Closed:
            report.t_a = std::move(closed.t_a);
            report.t_ab = std::move(closed.t_ab);
            report.reducible_a = closed.reducible_a;
            report.reducible_ab = closed.reducible_ab;
            report.method = Provenance::Closed;
            break;
        case CensusMode::Both: {
            std::ostringstream diff;
            if (auto k = detail::first_difference(brute.t_a, closed.t_a)) {
                diff << "T_A at (n=" << n << ", k=" << *k << "): brute "
                     << detail::row_value(brute.t_a, *k) << " vs closed "
                     << detail::row_value(closed.t_a, *k) << "; ";
            }
            if (auto k = detail::first_difference(brute.t_ab, closed.t_ab)) {
                diff << "T_AB at (n=" << n << ", k=" << *k << "): brute "
                     << detail::row_value(brute.t_ab, *k) << " vs closed "
                     << detail::row_value(closed.t_ab, *k) << "; ";
            }
            if (brute.reducible_a != closed.reducible_a) {
                diff << "I_A at n=" << n << ": brute " << brute.reducible_a << " vs closed "
                     << closed.reducible_a << "; ";
            }
            if (brute.reducible_ab != closed.reducible_ab) {
                diff << "I_AB at n=" << n << ": brute " << brute.reducible_ab << " vs closed "
                     << closed.reducible_ab << "; ";
            }
            if (!diff.str().empty()) throw ConsistencyError("census mismatch: " + diff.str());
            report.t_a = std::move(closed.t_a);
            report.t_ab = std::move(closed.t_ab);
            report.reducible_a = closed.reducible_a;
            report.reducible_ab = closed.reducible_ab;
            report.method = Provenance::BothAgree;
            break;
        }
    }
    return report;
}

}  // namespace iterate_census
