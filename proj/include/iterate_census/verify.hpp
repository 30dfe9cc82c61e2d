#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "census.hpp"
#include "exact_arith.hpp"
#include "iterate_tree.hpp"
#include "tableau.hpp"

namespace iterate_census {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 8;
    int brute_cap = kDefaultBruteForceCap;
    int enumeration_cap = kDefaultEnumerationCap;
    unsigned workers = 1;
    std::uint64_t seed = 20011016;
    int samples_per_n = 500;
};

namespace detail {

// Collects the first failure message; later failures only bump the count.
class Failures {
public:
    void add(const std::string& what) {
        if (count_++ == 0) first_ = what;
    }
    [[nodiscard]] CheckResult result(std::string name, const std::string& ok_detail) const {
        if (count_ == 0) return {std::move(name), true, ok_detail};
        return {std::move(name), false,
                std::to_string(count_) + " failure(s); first: " + first_};
    }

private:
    long count_ = 0;
    std::string first_;
};

inline std::vector<int> random_indices(std::mt19937_64& rng, int lines, int k) {
    std::vector<int> all(static_cast<std::size_t>(lines));
    for (int i = 0; i < lines; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(k));
    return all;
}

inline std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace detail

/// Runs the invariant suite over orders up to opts.max_n. Each check reports
/// pass/fail with the first witnessing counterexample.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opts = {}) {
    detail::require(opts.max_n >= 2, "verify: max-n must be >= 2");
    detail::require_cap(opts.max_n, opts.brute_cap, "verify order (brute force)");
    const int max_n = opts.max_n;
    const BuildOptions build{opts.enumeration_cap, opts.workers};
    std::vector<CheckResult> results;

    {
        detail::Failures f;
        for (long n = 1; n <= 60; ++n) {
            for (long k = 0; k <= n; ++k) {
                if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k)) {
                    f.add("Pascal fails at (" + std::to_string(n) + "," + std::to_string(k) + ")");
                }
            }
        }
        for (long k = 1; k <= 60; ++k) {
            if (!catalan_recursion_residual(k).is_zero()) f.add("Catalan recursion at k=" + std::to_string(k));
        }
        results.push_back(f.result("binomial-and-catalan", "Pascal n<=60, recursion k<=60"));
    }

    std::vector<Tableau> a_tabs;
    std::vector<Tableau> ab_tabs;
    {
        detail::Failures f;
        for (int n = 1; n <= max_n; ++n) {
            const auto trees = enumerate_iterates(n, opts.enumeration_cap);
            if (BigNat(static_cast<unsigned long>(trees.size())) != catalan(n)) {
                f.add("enumeration size at n=" + std::to_string(n));
            }
            std::unordered_set<IterateTree> seen(trees.begin(), trees.end());
            if (seen.size() != trees.size() || !std::is_sorted(trees.begin(), trees.end())) {
                f.add("enumeration not distinct/sorted at n=" + std::to_string(n));
            }
        }
        results.push_back(f.result("enumeration", "|enumerate(n)| = S_n, n<=" + std::to_string(max_n)));
    }

    for (int n = 2; n <= max_n; ++n) {
        a_tabs.push_back(build_tableau_A(n, build));
        ab_tabs.push_back(direct_sum(a_tabs.back(), build_tableau_B(n, build)));
    }
    auto tab_a = [&](int n) -> const Tableau& { return a_tabs[static_cast<std::size_t>(n - 2)]; };
    auto tab_ab = [&](int n) -> const Tableau& { return ab_tabs[static_cast<std::size_t>(n - 2)]; };

    {
        detail::Failures f;
        for (int n = 2; n <= max_n; ++n) {
            for (const Tableau* t : {&tab_a(n), &tab_ab(n)}) {
                for (int i = 1; i <= t->line_count(); ++i) {
                    if (BigNat(static_cast<unsigned long>(t->line(i).set.count())) != catalan(n - 1)) {
                        f.add(std::string(kind_name(t->kind())) + " n=" + std::to_string(n) +
                              " line " + std::to_string(i));
                    }
                }
            }
        }
        results.push_back(f.result("line-sizes", "every line has S_(n-1) elements"));
    }

    {
        detail::Failures f;
        std::mt19937_64 rng(opts.seed);
        for (int n = 3; n <= std::min(max_n, 8); ++n) {
            const Tableau& t = tab_ab(n);
            auto check = [&](const std::vector<int>& idx) {
                const BigNat got = line_intersection_size(t, idx);
                const BigNat want = predicted_intersection_size(n, idx);
                if (got != want) {
                    f.add("n=" + std::to_string(n) + " lines {" + detail::join(idx) + "}: " +
                          got.str() + " vs law " + want.str());
                }
            };
            for (int i = 1; i <= n + 2; ++i) {
                for (int j = i; j <= n + 2; ++j) check({i, j});
            }
            for (int s = 0; s < opts.samples_per_n; ++s) {
                check(detail::random_indices(rng, n + 2, 3 + s % 2));
            }
        }
        results.push_back(f.result("intersection-law", "pairs plus sampled triples/quadruples, 3<=n<=8"));
    }

    {
        detail::Failures f;
        for (int n = 2; n <= max_n; ++n) {
            for (IterateTree j : tab_a(n).index().trees()) {
                const int cherries = cherry_count(j);
                const int extra = (left_child_is_leaf(j) ? 1 : 0) + (right_child_is_leaf(j) ? 1 : 0);
                if (multiplicity(tab_a(n), j) != cherries ||
                    multiplicity(tab_ab(n), j) != cherries + extra) {
                    f.add("iterate " + j.code_string());
                }
            }
        }
        results.push_back(f.result("multiplicity-characterization", "cherry counts match line membership"));
    }

    {
        detail::Failures f;
        for (int n = 2; n <= max_n; ++n) {
            const auto ha = multiplicity_histogram(tab_a(n));
            const auto hab = multiplicity_histogram(tab_ab(n));
            for (long k = 1; k <= n + 2; ++k) {
                if (ha.at(static_cast<int>(k)) != t_nk(n, k)) {
                    f.add("T_A at (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
                }
                if (hab.at(static_cast<int>(k)) != t_nk_combined(n, k)) {
                    f.add("T_AB at (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
                }
            }
            for (const auto* h : {&ha, &hab}) {
                const auto lines = static_cast<unsigned long>(h == &ha ? n : n + 2);
                if (h->total() != catalan(n) || h->weighted_total() != BigNat(lines) * catalan(n - 1)) {
                    f.add("histogram mass at n=" + std::to_string(n));
                }
            }
        }
        results.push_back(f.result("histogram-equivalence", "empirical T rows match closed forms"));
    }

    {
        detail::Failures f;
        for (int n = 2; n <= std::min(max_n, opts.brute_cap); ++n) {
            const BigNat ba = brute_force_reducible_count(tab_a(n), opts.brute_cap, opts.workers);
            const BigNat bab = brute_force_reducible_count(tab_ab(n), opts.brute_cap, opts.workers);
            const BigNat ca = reducible_count_closed_A(n);
            const BigNat cab = reducible_count_closed_AB(n);
            if (ba != ca) f.add("I_A at n=" + std::to_string(n) + ": " + ba.str() + " vs " + ca.str());
            if (bab != cab) f.add("I_AB at n=" + std::to_string(n) + ": " + bab.str() + " vs " + cab.str());
        }
        results.push_back(f.result("oracle-equivalence", "brute force I equals closed form I"));
    }

    {
        detail::Failures f;
        for (int n = 3; n <= std::min(max_n, 8); ++n) {
            for (const Tableau* t : {&tab_a(n), &tab_ab(n)}) {
                for (IterateTree j : t->index().trees()) {
                    if (reducible_row_size(*t, j) != row_reducible_count(n, multiplicity(*t, j))) {
                        f.add(std::string(kind_name(t->kind())) + " iterate " + j.code_string());
                    }
                }
            }
        }
        results.push_back(f.result("row-sum-law", "row sums depend only on multiplicity"));
    }

    {
        detail::Failures f;
        for (long n = 2; n <= 60; ++n) {
            for (long k = 1; k <= n; ++k) {
                const BigRat ratio = t_nk_combined_by_ratio(n, k);
                if (ratio != BigRat(t_nk_combined_by_difference(n, k))) {
                    f.add("(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
                }
            }
        }
        for (long n = 1; n <= 40; ++n) {
            for (long k = 0; k <= (n + 1) / 2; ++k) {
                if (!moment_identity_residual(n, k).is_zero()) {
                    f.add("moment identity at (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
                }
            }
        }
        results.push_back(f.result("closed-form-identities", "difference form = ratio form n<=60; moment identity n<=40"));
    }

    {
        detail::Failures f;
        for (int n = 2; n <= std::min(max_n, kIncidenceMatrixCap); ++n) {
            for (const Tableau* t : {&tab_a(n), &tab_ab(n)}) {
                const auto m = incidence_matrix(*t);
                for (std::size_t i = 0; i < m.size(); ++i) {
                    if (m[i][i] != 1) f.add("diagonal at n=" + std::to_string(n));
                    for (std::size_t j = 0; j < i; ++j) {
                        if (m[i][j] != m[j][i]) f.add("asymmetry at n=" + std::to_string(n));
                    }
                }
            }
        }
        results.push_back(f.result("incidence-symmetry", "δ symmetric and reflexive"));
    }

    {
        detail::Failures f;
        for (long n = 3; n <= 10; ++n) {
            if (!(reducible_count_closed_AB(n) > reducible_count_closed_A(n))) {
                f.add("I_AB <= I_A at n=" + std::to_string(n));
            }
        }
        results.push_back(f.result("monotonicity", "I_AB > I_A for 3<=n<=10"));
    }

    return results;
}

}  // namespace iterate_census
