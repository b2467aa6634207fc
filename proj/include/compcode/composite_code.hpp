#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compcode/linear_code.hpp"

namespace compcode {

/// Fixed-width key: the coset index rendered most-significant bit first
/// ("Str2" rendering), always exactly key_len bits.
struct KeyBits {
    BitVector bits;

    static KeyBits from_index(std::size_t key_len, std::uint64_t index) {
        KeyBits kb{BitVector(key_len)};
        for (std::size_t j = 0; j < key_len; ++j)
            if ((index >> (key_len - 1 - j)) & 1u) kb.bits.set(j, true);
        return kb;
    }

    std::uint64_t index() const {
        std::uint64_t a = 0;
        for (std::size_t j = 0; j < bits.size(); ++j)
            if (bits.get(j)) a |= 1ull << (bits.size() - 1 - j);
        return a;
    }

    std::string str() const { return bits.str(); }

    bool operator==(const KeyBits&) const = default;
};

struct Violation {
    std::string check;      // which property failed
    std::string detail;     // human-readable description
    std::uint64_t center = 0;  // offending center / codeword, packed
};

struct VerificationReport {
    std::uint64_t checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// A validated nested pair C2 subset-of C1 of equal length n.
///
/// C1 (dimension k1) corrects the channel errors; the quotient C1/C2
/// carries the key: every u in C1 decomposes uniquely as
///
///     u = m . G2  xor  a . Q
///
/// where the rows of Q extend a basis of C2 to a basis of C1, and the
/// key_len = k1 - k2 coefficient bits a are the extracted key.  The
/// decomposition is constant on cosets of C2, so any two parties holding
/// the same codeword derive the same key, and the construction is a
/// deterministic function of (G1, G2): two parties building from the same
/// code spec agree bit for bit.
class CompositeCode {
public:
    /// Requires c1.n == c2.n, k2 < k1, and every generator row of c2 to be
    /// a codeword of c1 (NestingError otherwise).
    CompositeCode(LinearCode c1, LinearCode c2);

    const LinearCode& c1() const { return c1_; }
    const LinearCode& c2() const { return c2_; }
    std::size_t n() const { return c1_.n(); }
    std::size_t key_len() const { return key_len_; }
    std::size_t coset_count() const { return reps_.size(); }  // 2^key_len

    /// Rows extend a basis of C2 to a basis of C1 ((k1-k2) x n).
    const BitMatrix& coset_generator() const { return q_; }

    /// Key of codeword u (MembershipError if u is not in C1).
    KeyBits extract_key(const BitVector& u) const;

    /// Independent extraction route for cross-checks: decode u with C2's
    /// complete table, subtract the decoded codeword, and look the residual
    /// up among the stored coset representatives.  Agrees with extract_key
    /// because both use the same minimum-weight/lexicographic leader rule.
    KeyBits extract_key_by_decoding(const BitVector& u) const;

    /// Minimum-weight representative of coset a (lexicographic tie-break);
    /// representative 0 is the zero vector.  RangeError if a >= 2^key_len.
    BitVector coset_representative(std::uint64_t a) const;

    /// All codewords of C1 within Hamming distance radius of center, in
    /// lexicographic order.
    std::vector<BitVector> enumerate_ball(const BitVector& center, std::size_t radius) const;

    /// Exhaustive check over every center v in F_2^n (n <= 16): the keys of
    /// all C1 codewords within distance c2.t of v are pairwise distinct.
    VerificationReport verify_distinct_indices() const;            // OpenMP over centers
    VerificationReport verify_distinct_indices_serial() const;

    /// Partitions the 2^k1 codewords of C1 by extract_key and, as a second
    /// route, by their C2 syndrome: confirms both labelings agree, classes
    /// are pairwise disjoint, and every class has exactly 2^k2 members.
    VerificationReport verify_coset_disjointness() const;

    // --- single-word fast path ---

    /// Coset index of a packed codeword (no membership check).
    std::uint64_t key_index_of_word(std::uint64_t u) const;
    std::uint64_t representative_word(std::uint64_t a) const { return reps_[a]; }

private:
    LinearCode c1_, c2_;
    std::size_t key_len_ = 0;
    BitMatrix q_;

    // solver for u = x . B with B = [rows of G2 ; rows of Q]:
    // x = y . T where y_i = u[pivot_i] and T . B = rref(B)
    std::vector<std::uint64_t> transform_;     // T rows as k1-bit words
    std::vector<std::size_t> pivots_;          // pivot columns of rref(B)

    std::vector<std::uint64_t> reps_;          // coset index -> representative
};

namespace kernels {

/// Fills out[a] with the minimum-(weight, lex) member of the coset
/// (Str2(a) . q_rows) + span(g2_rows); out must be sized 2^q_rows.size().
void coset_representative_scan_serial(std::span<const std::uint64_t> q_rows,
                                      std::span<const std::uint64_t> g2_rows,
                                      std::vector<std::uint64_t>& out);
void coset_representative_scan(std::span<const std::uint64_t> q_rows,
                               std::span<const std::uint64_t> g2_rows,
                               std::vector<std::uint64_t>& out);  // OpenMP

}  // namespace kernels

}  // namespace compcode
