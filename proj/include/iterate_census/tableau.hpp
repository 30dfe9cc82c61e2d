#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"
#include "exact_arith.hpp"
#include "index_set.hpp"
#include "iterate_tree.hpp"
#include "parallel.hpp"

namespace iterate_census {

enum class TableauKind { A, B, AB };

inline std::string_view kind_name(TableauKind kind) {
    switch (kind) {
        case TableauKind::A: return "A";
        case TableauKind::B: return "B";
        case TableauKind::AB: return "AB";
    }
    return "?";
}

/// Accepts "a", "b", "ab" in any case.
inline TableauKind parse_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "a") return TableauKind::A;
    if (lower == "b") return TableauKind::B;
    if (lower == "ab") return TableauKind::AB;
    throw ArgumentError("unknown tableau kind '" + std::string(text) + "' (expected a, b or ab)");
}

/// The canonical enumeration of order-n trees with position lookup.
class IterateIndex {
public:
    explicit IterateIndex(int order, int cap = kDefaultEnumerationCap)
        : order_(order), trees_(enumerate_iterates(order, cap)) {}

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] std::size_t size() const noexcept { return trees_.size(); }
    [[nodiscard]] const std::vector<IterateTree>& trees() const noexcept { return trees_; }
    [[nodiscard]] IterateTree operator[](std::size_t i) const { return trees_[i]; }

    [[nodiscard]] std::optional<std::size_t> find(IterateTree t) const {
        auto it = std::lower_bound(trees_.begin(), trees_.end(), t);
        if (it == trees_.end() || *it != t) return std::nullopt;
        return static_cast<std::size_t>(it - trees_.begin());
    }

    [[nodiscard]] std::size_t position(IterateTree t) const {
        auto pos = find(t);
        detail::require(pos.has_value(), "tree " + t.code_string() + " is not of order " +
                                             std::to_string(order_));
        return *pos;
    }

private:
    int order_;
    std::vector<IterateTree> trees_;
};

/// One line of a tableau: its members in canonical order and as a bitset over
/// the enumeration index.
struct Line {
    std::vector<IterateTree> members;
    IndexSet set;
};

class Tableau {
public:
    Tableau(int order, TableauKind kind, std::shared_ptr<const IterateIndex> index,
            std::vector<Line> lines)
        : order_(order), kind_(kind), index_(std::move(index)), lines_(std::move(lines)) {}

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] TableauKind kind() const noexcept { return kind_; }
    [[nodiscard]] const IterateIndex& index() const noexcept { return *index_; }
    [[nodiscard]] std::shared_ptr<const IterateIndex> shared_index() const noexcept { return index_; }
    [[nodiscard]] const std::vector<Line>& lines() const noexcept { return lines_; }
    [[nodiscard]] int line_count() const noexcept { return static_cast<int>(lines_.size()); }

    /// Line by 1-based index.
    [[nodiscard]] const Line& line(int i) const {
        detail::require(i >= 1 && i <= line_count(),
                        "line index " + std::to_string(i) + " outside 1.." +
                            std::to_string(line_count()));
        return lines_[static_cast<std::size_t>(i - 1)];
    }

    /// Bit i-1 set when line i contains the iterate at enumeration position `pos`.
    [[nodiscard]] std::uint32_t membership_mask(std::size_t pos) const {
        std::uint32_t mask = 0;
        for (std::size_t l = 0; l < lines_.size(); ++l) {
            if (lines_[l].set.contains(pos)) mask |= std::uint32_t{1} << l;
        }
        return mask;
    }

private:
    int order_;
    TableauKind kind_;
    std::shared_ptr<const IterateIndex> index_;
    std::vector<Line> lines_;
};

struct BuildOptions {
    int cap = kDefaultEnumerationCap;
    unsigned workers = 1;
};

namespace detail {

// Builds each line as the image of the order-(n-1) trees under a generator.
// Throws ConsistencyError if a generator is not injective.
template <class Generator>
std::vector<Line> build_lines(const IterateIndex& universe, const std::vector<IterateTree>& sources,
                              int line_count, unsigned workers, Generator&& generate) {
    std::vector<Line> lines(static_cast<std::size_t>(line_count));
    parallel_chunks(static_cast<std::size_t>(line_count), workers,
                    [&](std::size_t, std::size_t begin, std::size_t end) {
                        for (std::size_t l = begin; l < end; ++l) {
                            Line& line = lines[l];
                            line.set = IndexSet(universe.size());
                            line.members.reserve(sources.size());
                            for (IterateTree p : sources) {
                                const IterateTree t = generate(static_cast<int>(l) + 1, p);
                                line.set.insert(universe.position(t));
                                line.members.push_back(t);
                            }
                            std::sort(line.members.begin(), line.members.end());
                            if (line.set.count() != sources.size()) {
                                throw ConsistencyError("line " + std::to_string(l + 1) +
                                                       " has repeated elements");
                            }
                        }
                    });
    return lines;
}

inline void require_tableau_order(int n, int cap) {
    require(n >= 1, "tableau order must be >= 1, got " + std::to_string(n));
    require_cap(n, cap, "tableau order");
}

}  // namespace detail

/// A_n: line i holds every (n-1)-iterate with its i-th leaf expanded to x·x.
inline Tableau build_tableau_A(int n, const BuildOptions& opts = {}) {
    detail::require_tableau_order(n, opts.cap);
    auto universe = std::make_shared<const IterateIndex>(n, opts.cap);
    const auto sources = enumerate_iterates(n - 1, opts.cap);
    auto lines = detail::build_lines(*universe, sources, n, opts.workers,
                                     [](int i, IterateTree p) { return substitute_leaf(p, i); });
    return Tableau(n, TableauKind::A, std::move(universe), std::move(lines));
}

/// B_n: line 1 = {P·x}, line 2 = {x·P} over all (n-1)-iterates P.
inline Tableau build_tableau_B(int n, const BuildOptions& opts = {}) {
    detail::require_tableau_order(n, opts.cap);
    auto universe = std::make_shared<const IterateIndex>(n, opts.cap);
    const auto sources = enumerate_iterates(n - 1, opts.cap);
    auto lines = detail::build_lines(*universe, sources, 2, opts.workers, [](int i, IterateTree p) {
        return i == 1 ? product(p, IterateTree::leaf()) : product(IterateTree::leaf(), p);
    });
    return Tableau(n, TableauKind::B, std::move(universe), std::move(lines));
}

/// A_n ⊕ B_n: the n lines of A followed by {P·x} then {x·P}.
inline Tableau direct_sum(const Tableau& a, const Tableau& b) {
    detail::require(a.kind() == TableauKind::A && b.kind() == TableauKind::B,
                    "direct_sum: expects an A tableau and a B tableau");
    detail::require(a.order() == b.order(), "direct_sum: order mismatch " +
                                                std::to_string(a.order()) + " vs " +
                                                std::to_string(b.order()));
    std::vector<Line> lines = a.lines();
    lines.insert(lines.end(), b.lines().begin(), b.lines().end());
    return Tableau(a.order(), TableauKind::AB, a.shared_index(), std::move(lines));
}

inline Tableau build_tableau(int n, TableauKind kind, const BuildOptions& opts = {}) {
    switch (kind) {
        case TableauKind::A: return build_tableau_A(n, opts);
        case TableauKind::B: return build_tableau_B(n, opts);
        case TableauKind::AB: return direct_sum(build_tableau_A(n, opts), build_tableau_B(n, opts));
    }
    throw ArgumentError("unknown tableau kind");
}

/// Cardinality of the intersection of the named lines (1-based; repeats allowed).
inline BigNat line_intersection_size(const Tableau& t, std::span<const int> indices) {
    detail::require(!indices.empty(), "line_intersection_size: no line indices");
    IndexSet acc = t.line(indices.front()).set;
    for (int i : indices.subspan(1)) acc &= t.line(i).set;
    return BigNat(static_cast<unsigned long>(acc.count()));
}

/// The intersection law for A_n ⊕ B_n: S_{n-1} for a single (possibly repeated)
/// line, 0 when two of the lines differ by 1 modulo n, S_{n-k} for k distinct
/// pairwise non-adjacent lines.
inline BigNat predicted_intersection_size(int n, std::span<const int> indices) {
    detail::require(n >= 2, "predicted_intersection_size: n must be >= 2");
    detail::require(!indices.empty(), "predicted_intersection_size: no line indices");
    std::vector<int> distinct(indices.begin(), indices.end());
    for (int i : distinct) {
        detail::require(i >= 1 && i <= n + 2, "predicted_intersection_size: line index " +
                                                  std::to_string(i) + " outside 1.." +
                                                  std::to_string(n + 2));
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t a = 0; a < distinct.size(); ++a) {
        for (std::size_t b = a + 1; b < distinct.size(); ++b) {
            if ((distinct[b] - distinct[a]) % n == 1) return BigNat{};
        }
    }
    return catalan_or_zero(n - static_cast<long>(distinct.size()));
}

/// Number of lines of `t` containing `j`.
inline int multiplicity(const Tableau& t, IterateTree j) {
    detail::require(j.order() == t.order(), "multiplicity: iterate order " +
                                                std::to_string(j.order()) + " != tableau order " +
                                                std::to_string(t.order()));
    return std::popcount(t.membership_mask(t.index().position(j)));
}

/// Empirical distribution of multiplicities: k -> number of iterates occurring
/// in exactly k lines. Zero counts are omitted; key 0 appears only for B_n,
/// whose two lines do not cover every iterate.
struct MultiplicityHistogram {
    int order = 0;
    TableauKind kind = TableauKind::A;
    std::map<int, BigNat> counts;

    [[nodiscard]] BigNat total() const {
        BigNat s;
        for (const auto& [k, c] : counts) s += c;
        return s;
    }
    [[nodiscard]] BigNat weighted_total() const {
        BigNat s;
        for (const auto& [k, c] : counts) s += BigNat(k) * c;
        return s;
    }
    [[nodiscard]] BigNat at(int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? BigNat{} : it->second;
    }
};

inline MultiplicityHistogram multiplicity_histogram(const Tableau& t) {
    std::map<int, std::uint64_t> raw;
    for (std::size_t pos = 0; pos < t.index().size(); ++pos) {
        ++raw[std::popcount(t.membership_mask(pos))];
    }
    MultiplicityHistogram h{t.order(), t.kind(), {}};
    for (const auto& [k, c] : raw) {
        if (k > 0) h.counts.emplace(k, BigNat(static_cast<unsigned long long>(c)));
    }
    if (auto it = raw.find(0); it != raw.end()) {
        h.counts.emplace(0, BigNat(static_cast<unsigned long long>(it->second)));
    }
    return h;
}

}  // namespace iterate_census
