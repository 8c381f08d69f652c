#pragma once

#include "pauliflow/bit_matrix.hpp"

#include <bit>
#include <cstddef>
#include <vector>

namespace pauliflow {

/// Subset of a graph's vertices, indexed by vertex position.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : size_(universe), words_(words_for(universe), 0) {}

    [[nodiscard]] std::size_t universe() const { return size_; }

    [[nodiscard]] bool contains(std::size_t v) const {
        return v < size_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
    }
    void insert(std::size_t v) { words_.at(v / kWordBits) |= Word{1} << (v % kWordBits); }
    void erase(std::size_t v) { words_.at(v / kWordBits) &= ~(Word{1} << (v % kWordBits)); }
    void toggle(std::size_t v) { words_.at(v / kWordBits) ^= Word{1} << (v % kWordBits); }

    [[nodiscard]] std::size_t count() const {
        std::size_t total = 0;
        for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    [[nodiscard]] bool empty() const {
        for (Word w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    [[nodiscard]] bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        }
        return true;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace pauliflow
