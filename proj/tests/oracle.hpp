#pragma once

// Test-only reference implementations. They work on fully parenthesized words
// ("(x*x)") and naive pair loops, sharing no code path with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "iterate_census/iterate_tree.hpp"

namespace oracle {

using Word = std::string;
using Lines = std::vector<std::set<Word>>;

inline std::vector<Word> trees(int n) {
    if (n == 0) return {"x"};
    std::vector<Word> out;
    for (int left = 0; left < n; ++left) {
        for (const Word& l : trees(left)) {
            for (const Word& r : trees(n - 1 - left)) out.push_back("(" + l + "*" + r + ")");
        }
    }
    return out;
}

/// Word of a library tree in the oracle's notation (outer parentheses kept).
inline Word word_of(iterate_census::IterateTree t) {
    const std::string w = t.word("*");
    return t.order() == 0 ? w : "(" + w + ")";
}

inline Word expand_leaf(const Word& w, int leaf) {
    int seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 'x' && ++seen == leaf) return w.substr(0, i) + "(x*x)" + w.substr(i + 1);
    }
    return {};
}

inline Lines lines_A(int n) {
    Lines lines(static_cast<std::size_t>(n));
    for (const Word& p : trees(n - 1)) {
        for (int i = 1; i <= n; ++i) lines[static_cast<std::size_t>(i - 1)].insert(expand_leaf(p, i));
    }
    return lines;
}

inline Lines lines_AB(int n) {
    Lines lines = lines_A(n);
    std::set<Word> px;
    std::set<Word> xp;
    for (const Word& p : trees(n - 1)) {
        px.insert("(" + p + "*x)");
        xp.insert("(x*" + p + ")");
    }
    lines.push_back(px);
    lines.push_back(xp);
    return lines;
}

/// Number of ordered pairs (i, j) sharing at least one line, by direct double loop.
inline std::uint64_t reducible_pairs(int n, const Lines& lines) {
    const auto all = trees(n);
    std::uint64_t count = 0;
    for (const Word& a : all) {
        for (const Word& b : all) {
            for (const auto& line : lines) {
                if (line.count(a) && line.count(b)) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

inline int multiplicity(const Word& w, const Lines& lines) {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(),
                                          [&](const auto& l) { return l.count(w) > 0; }));
}

inline int cherries(const Word& w) {
    int c = 0;
    for (std::size_t pos = w.find("(x*x)"); pos != Word::npos; pos = w.find("(x*x)", pos + 1)) ++c;
    return c;
}

/// Catalan numbers by the convolution recurrence.
inline std::vector<mpz_class> catalan_table(int upto) {
    std::vector<mpz_class> c(static_cast<std::size_t>(upto) + 1);
    c[0] = 1;
    for (int m = 1; m <= upto; ++m) {
        for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
    return c;
}

/// Random tree shape with `n` internal nodes (random left/right size split).
inline iterate_census::TreeShape random_shape(int n, std::mt19937_64& rng) {
    iterate_census::TreeShape shape;
    auto build = [&](auto&& self, int size) -> int {
        const int id = static_cast<int>(shape.nodes.size());
        shape.nodes.emplace_back();
        if (size == 0) return id;
        std::uniform_int_distribution<int> split(0, size - 1);
        const int left_size = split(rng);
        const int l = self(self, left_size);
        const int r = self(self, size - 1 - left_size);
        shape.nodes[static_cast<std::size_t>(id)] = {l, r};
        return id;
    };
    build(build, n);
    return shape;
}

}  // namespace oracle
