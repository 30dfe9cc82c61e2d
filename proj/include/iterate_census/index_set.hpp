#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace iterate_census {

/// Fixed-universe bitset over enumeration indices [0, size).
class IndexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }

    void insert(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    [[nodiscard]] bool contains(std::size_t i) const {
        return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
    }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    IndexSet& operator|=(const IndexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    void clear() noexcept {
        for (Word& w : words_) w = 0;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

/// |a ∩ b| without materializing the intersection.
inline std::size_t intersection_count(const IndexSet& a, const IndexSet& b) {
    std::size_t c = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    return c;
}

}  // namespace iterate_census
