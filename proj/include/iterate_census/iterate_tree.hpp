#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace iterate_census {

/// An n-iterate of a binary operation on a single generator x: a full binary
/// tree with `order()` internal nodes and `order() + 1` leaves.
///
/// The tree is stored as its preorder code (internal node = 1, leaf = 0) of
/// length 2n+1, packed most-significant-first into a 64-bit word under a
/// sentinel 1 bit. Equality is code equality. Ordering is the canonical
/// enumeration order: lower order first, then lexicographic on the code with
/// 1 sorting before 0.
class IterateTree {
public:
    static constexpr int kMaxOrder = 31;

    /// The bare generator x (order 0).
    IterateTree() = default;
    static IterateTree leaf() { return IterateTree{}; }

    /// Parses a 0/1 code string such as "11000". Throws ArgumentError if the
    /// string is not the preorder code of a full binary tree.
    static IterateTree from_code(std::string_view code) {
        detail::require(!code.empty(), "IterateTree: empty code");
        detail::require(code.size() <= 2 * kMaxOrder + 1, "IterateTree: code too long");
        std::uint64_t bits = 1;
        long pending = 1;
        for (std::size_t i = 0; i < code.size(); ++i) {
            const char c = code[i];
            detail::require(c == '0' || c == '1',
                            "IterateTree: invalid code symbol in '" + std::string(code) + "'");
            detail::require(pending > 0, "IterateTree: trailing symbols in '" +
                                             std::string(code) + "'");
            pending += (c == '1') ? 1 : -1;
            bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
        }
        detail::require(pending == 0, "IterateTree: incomplete code '" + std::string(code) + "'");
        return IterateTree(bits);
    }

    /// Builds directly from the packed representation; the caller guarantees validity.
    static IterateTree from_packed(std::uint64_t packed) { return IterateTree(packed); }

    [[nodiscard]] std::uint64_t packed() const noexcept { return packed_; }
    [[nodiscard]] int code_length() const noexcept { return std::bit_width(packed_) - 1; }
    [[nodiscard]] int order() const noexcept { return (code_length() - 1) / 2; }
    [[nodiscard]] int leaf_count() const noexcept { return order() + 1; }
    /// The code bits without the sentinel, most significant bit = root.
    [[nodiscard]] std::uint64_t payload() const noexcept {
        return packed_ & ((std::uint64_t{1} << code_length()) - 1);
    }
    /// Code bit at preorder position `pos` (0 = root).
    [[nodiscard]] bool bit(int pos) const noexcept {
        return ((packed_ >> (code_length() - 1 - pos)) & 1U) != 0;
    }

    [[nodiscard]] std::string code_string() const {
        std::string s;
        const int len = code_length();
        s.reserve(static_cast<std::size_t>(len));
        for (int p = 0; p < len; ++p) s.push_back(bit(p) ? '1' : '0');
        return s;
    }

    /// Fully parenthesized word, outermost product unbracketed: "((x·x)·x)·x".
    [[nodiscard]] std::string word(std::string_view op = "·") const {
        std::string out;
        int pos = 0;
        render(pos, op, out, true);
        return out;
    }

    /// One past the last code position of the subtree rooted at `pos`.
    [[nodiscard]] int subtree_end(int pos) const noexcept {
        long pending = 1;
        while (pending > 0) {
            pending += bit(pos) ? 1 : -1;
            ++pos;
        }
        return pos;
    }

    friend bool operator==(IterateTree a, IterateTree b) noexcept { return a.packed_ == b.packed_; }
    friend std::strong_ordering operator<=>(IterateTree a, IterateTree b) noexcept {
        if (auto c = a.order() <=> b.order(); c != 0) return c;
        return b.packed_ <=> a.packed_;  // same length: larger code means earlier 1s
    }

private:
    explicit IterateTree(std::uint64_t packed) : packed_(packed) {}

    void render(int& pos, std::string_view op, std::string& out, bool top) const {
        if (!bit(pos++)) {
            out.push_back('x');
            return;
        }
        if (!top) out.push_back('(');
        render(pos, op, out, false);
        out.append(op);
        render(pos, op, out, false);
        if (!top) out.push_back(')');
    }

    std::uint64_t packed_ = 0b10;  // sentinel + "0"
};

/// The product L·R: a new root with left subtree L and right subtree R.
inline IterateTree product(IterateTree left, IterateTree right) {
    detail::require(left.order() + right.order() + 1 <= IterateTree::kMaxOrder,
                    "product: result order exceeds " + std::to_string(IterateTree::kMaxOrder));
    const int rlen = right.code_length();
    const int llen = left.code_length();
    const std::uint64_t bits = (std::uint64_t{0b11} << (llen + rlen)) |
                               (left.payload() << rlen) | right.payload();
    return IterateTree::from_packed(bits);
}

/// Replaces the `leaf`-th occurrence of x (1-based, left to right) by x·x.
inline IterateTree substitute_leaf(IterateTree tree, int leaf) {
    detail::require(leaf >= 1 && leaf <= tree.leaf_count(),
                    "substitute_leaf: leaf index " + std::to_string(leaf) + " outside 1.." +
                        std::to_string(tree.leaf_count()));
    detail::require(tree.order() + 1 <= IterateTree::kMaxOrder,
                    "substitute_leaf: result order exceeds " +
                        std::to_string(IterateTree::kMaxOrder));
    const int len = tree.code_length();
    int pos = 0;
    for (int seen = 0;; ++pos) {
        if (!tree.bit(pos) && ++seen == leaf) break;
    }
    const int tail = len - pos - 1;
    const std::uint64_t payload = tree.payload();
    const std::uint64_t head = payload >> (tail + 1);
    const std::uint64_t rest = payload & ((std::uint64_t{1} << tail) - 1);
    const std::uint64_t bits = ((((std::uint64_t{1} << pos) | head) << 3 | 0b100) << tail) | rest;
    return IterateTree::from_packed(bits);
}

/// Number of internal nodes whose two children are both leaves.
/// In the preorder code these are exactly the occurrences of "100".
inline int cherry_count(IterateTree tree) {
    detail::require(tree.order() >= 1, "cherry_count: order-0 tree has no internal node");
    const std::uint64_t x = tree.payload();
    const int len = tree.code_length();
    const std::uint64_t window = ((std::uint64_t{1} << len) - 1) & ~std::uint64_t{0b11};
    return std::popcount(x & ~(x << 1) & ~(x << 2) & window);
}

/// True when the root's left child is a leaf (the tree has the form x·P).
inline bool left_child_is_leaf(IterateTree tree) {
    return tree.order() >= 1 && !tree.bit(1);
}

/// True when the root's right child is a leaf (the tree has the form P·x).
inline bool right_child_is_leaf(IterateTree tree) {
    return tree.order() >= 1 && tree.subtree_end(1) == tree.code_length() - 1;
}

/// Calls `visit` on every order-n tree in canonical order.
template <class Visitor>
void for_each_iterate(int order, Visitor&& visit) {
    detail::require(order >= 0 && order <= IterateTree::kMaxOrder,
                    "for_each_iterate: order " + std::to_string(order) + " out of range");
    const int len = 2 * order + 1;
    // Depth-first over code prefixes trying 1 before 0 yields lexicographic order.
    auto recurse = [&](auto&& self, int pos, int ones, int pending, std::uint64_t bits) -> void {
        if (pos == len) {
            visit(IterateTree::from_packed(bits));
            return;
        }
        if (ones < order) self(self, pos + 1, ones + 1, pending + 1, (bits << 1) | 1U);
        // A 0 may close the last pending subtree only at the final position.
        if (pending > 1 || (pending == 1 && pos == len - 1)) {
            self(self, pos + 1, ones, pending - 1, bits << 1);
        }
    };
    recurse(recurse, 0, 0, 1, 1);
}

/// Default cap on the order accepted by enumerate_iterates.
inline constexpr int kDefaultEnumerationCap = 16;

/// All order-n trees, each once, in canonical order. Size is S_n.
inline std::vector<IterateTree> enumerate_iterates(int order, int cap = kDefaultEnumerationCap) {
    detail::require(order >= 0, "enumerate_iterates: negative order");
    detail::require_cap(order, cap, "enumerate_iterates: order");
    std::vector<IterateTree> out;
    for_each_iterate(order, [&](IterateTree t) { out.push_back(t); });
    return out;
}

/// Pointer-free decoded form of a tree: node 0 is the root, leaves have no children.
struct TreeShape {
    struct Node {
        int left = -1;
        int right = -1;
        [[nodiscard]] bool is_leaf() const noexcept { return left < 0; }
        friend bool operator==(const Node&, const Node&) = default;
    };
    std::vector<Node> nodes;

    friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

inline TreeShape decode(IterateTree tree) {
    TreeShape shape;
    int pos = 0;
    auto build = [&](auto&& self) -> int {
        const int id = static_cast<int>(shape.nodes.size());
        shape.nodes.emplace_back();
        if (tree.bit(pos++)) {
            const int l = self(self);
            const int r = self(self);
            shape.nodes[static_cast<std::size_t>(id)] = {l, r};
        }
        return id;
    };
    build(build);
    return shape;
}

inline IterateTree encode(const TreeShape& shape) {
    detail::require(!shape.nodes.empty(), "encode: empty shape");
    std::string code;
    auto walk = [&](auto&& self, int id) -> void {
        const auto& node = shape.nodes.at(static_cast<std::size_t>(id));
        if (node.is_leaf()) {
            code.push_back('0');
            return;
        }
        code.push_back('1');
        self(self, node.left);
        self(self, node.right);
    };
    walk(walk, 0);
    return IterateTree::from_code(code);
}

}  // namespace iterate_census

template <>
struct std::hash<iterate_census::IterateTree> {
    std::size_t operator()(iterate_census::IterateTree t) const noexcept {
        return std::hash<std::uint64_t>{}(t.packed());
    }
};
