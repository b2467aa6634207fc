#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compcode/errors.hpp"

namespace compcode {

/// Dense GF(2) vector.
///
/// Bit order convention, used everywhere in this project: index 0 is the
/// leftmost character of the textual form, so from_string("1011") has
/// bit 0 = 1, bit 1 = 0, bit 2 = 1, bit 3 = 1.  Internally bit i lives at
/// position (i & 63) of word (i >> 6); unused tail bits are kept zero so
/// word-wise equality and popcounts are exact.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t n) : len_(n), words_(word_count_for(n), 0) {}

    static BitVector zeros(std::size_t n) { return BitVector(n); }

    static BitVector ones(std::size_t n) {
        BitVector v(n);
        for (auto& w : v.words_) w = ~0ull;
        v.mask_tail();
        return v;
    }

    /// Unit vector e_i (single 1 at index i).
    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i, true);
        return v;
    }

    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw ParseError("bit string may contain only 0 and 1: '" + std::string(s) + "'");
        }
        return v;
    }

    /// Low 64-bit view for the word-level kernels; requires n <= 64.
    static BitVector from_word(std::size_t n, std::uint64_t bits) {
        BitVector v(n);
        if (n > 0) {
            v.words_[0] = bits;
            v.mask_tail();
        }
        return v;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        check_index(i);
        const std::uint64_t mask = 1ull << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= 1ull << (i & 63);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }

    std::uint64_t word(std::size_t wi) const { return words_[wi]; }
    std::size_t word_count() const { return words_.size(); }

    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    BitVector& operator^=(const BitVector& other) {
        if (other.len_ != len_) throw DimensionError("xor of vectors with different lengths");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVector&) const = default;

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::string str() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    static std::size_t word_count_for(std::size_t n) { return (n + 63) / 64; }

    void check_index(std::size_t i) const {
        if (i >= len_) throw RangeError("bit index out of range");
    }

    void mask_tail() {
        if (len_ & 63) words_.back() &= (1ull << (len_ & 63)) - 1;
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t weight(const BitVector& v) { return v.weight(); }

inline std::size_t hamming_distance(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size()) throw DimensionError("hamming_distance of vectors with different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.word_count(); ++i)
        d += static_cast<std::size_t>(std::popcount(x.word(i) ^ y.word(i)));
    return d;
}

/// Order induced by the textual form: index 0 compared first, 0 < 1.
inline bool lex_less(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw DimensionError("lex_less of vectors with different lengths");
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        const std::uint64_t diff = a.word(i) ^ b.word(i);
        if (diff) {
            // lowest set bit of diff = earliest differing index
            const int bit = std::countr_zero(diff);
            return ((a.word(i) >> bit) & 1u) == 0;
        }
    }
    return false;
}

namespace gf2 {

// Same order as lex_less, on single-word vectors of n <= 64 bits.
inline bool lex_less_word(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((a >> std::countr_zero(diff)) & 1u) == 0;
}

}  // namespace gf2

}  // namespace compcode
