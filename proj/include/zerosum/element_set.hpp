#pragma once

#include "zerosum/group.hpp"
#include "zerosum/util.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace zerosum {

/// A set of group elements as a fixed-width bit vector over dense element
/// indices. Small enough to be a hash-map key; iteration is ascending.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(long long universe)
        : size_(static_cast<int>(universe)),
          words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    int universe_size() const { return size_; }

    bool test(ElementIndex i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }
    void set(ElementIndex i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(ElementIndex i) {
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    ElementSet& operator|=(const ElementSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    /// Calls fn(index) for every member, ascending.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                fn(static_cast<ElementIndex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<ElementIndex> to_indices() const {
        std::vector<ElementIndex> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](ElementIndex i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(size_);
        for (std::uint64_t w : words_) hash_combine(h, static_cast<std::size_t>(w));
        return h;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace zerosum
