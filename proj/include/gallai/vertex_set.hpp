#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace gallai {

// Packed vertex set over a fixed ground set [0, n). One 64-bit word per 64
// vertices; the detection kernels live on word-parallel intersections of
// these rows.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int ground_size() const { return n_; }

    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    // First member >= from, or -1.
    int next(int from) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + __builtin_ctzll(w);
            if (++wi == static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    // a &= b & c, without a temporary.
    void assign_and(const VertexSet& b, const VertexSet& c) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = b.words_[i] & c.words_[i];
    }
    void or_and(const VertexSet& b, const VertexSet& c) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= b.words_[i] & c.words_[i];
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    // First vertex present in the complement (relative to [0, n)), or -1.
    int first_missing() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = ~words_[i];
            if ((i + 1) * 64 > static_cast<std::size_t>(n_))
                w &= (std::uint64_t{1} << (n_ & 63)) - 1;  // n_ % 64 != 0 here
            if (w) return static_cast<int>(i << 6) + __builtin_ctzll(w);
        }
        return -1;
    }

    friend int intersect_first(const VertexSet& a, const VertexSet& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t w = a.words_[i] & b.words_[i];
            if (w) return static_cast<int>(i << 6) + __builtin_ctzll(w);
        }
        return -1;
    }

    friend int intersect_count(const VertexSet& a, const VertexSet& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += __builtin_popcountll(a.words_[i] & b.words_[i]);
        return c;
    }

    bool operator==(const VertexSet&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gallai
