#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "compcode/bitmat.hpp"
#include "compcode/bitvec.hpp"

namespace compcode {

struct DecodeResult {
    BitVector codeword;
    BitVector error_pattern;
};

/// An (n, k) binary linear block code with a complete syndrome -> coset-leader
/// decoding table.
///
/// Construction enforces the enumeration budgets k <= 24 and n - k <= 24
/// (ResourceError beyond), which bounds n <= 48, so every codeword, leader
/// and syndrome fits in a single 64-bit word; the *_word member functions
/// expose that fast path to the scan kernels.
///
/// Tables are built eagerly and the object is immutable afterwards, so any
/// number of workers may decode concurrently without synchronization.
class LinearCode {
public:
    /// Binary Hamming code [2^r - 1, 2^r - 1 - r, 3].  The parity-check
    /// matrix has the binary representations of 1..n as columns (most
    /// significant bit in row 0); G is the reduced-echelon nullspace basis.
    static LinearCode hamming(unsigned r);

    /// Simplex code [2^r - 1, r, 2^(r-1)], the dual of hamming(r): its
    /// generator is the Hamming parity-check matrix.
    static LinearCode simplex(unsigned r);

    /// Reed-Muller code RM(r, m) of length 2^m.  Generator rows are the
    /// evaluations of all monomials of degree <= r in m variables, ordered
    /// by degree then lexicographically; variable j (1-based) evaluates at
    /// point p to bit (m - j) of p, so x_1 is 00001111 for m = 3.
    static LinearCode reed_muller(unsigned r, unsigned m);

    /// Repetition code [n, 1, n].
    static LinearCode repetition(std::size_t n);

    /// Code spanned by the rows of g; the stored generator is the reduced
    /// row-echelon form of g.  Rank-deficient g raises ConstructionError.
    static LinearCode from_generator(const BitMatrix& g);

    /// Family descriptor: "hamming:3", "rm:1,3", "repetition:5", "simplex:3"
    /// or "file:<path>" (first line "n k", then k generator rows as 0/1
    /// strings).  Unknown names raise ParseError listing the valid families.
    static LinearCode make(const std::string& family_spec);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t min_distance() const { return d_; }
    std::size_t t() const { return t_; }  // floor((d - 1) / 2)

    const BitMatrix& generator() const { return g_; }
    const BitMatrix& parity_check() const { return h_; }

    BitVector encode(const BitVector& msg) const;
    BitVector syndrome(const BitVector& v) const;
    DecodeResult decode(const BitVector& v) const;
    bool contains(const BitVector& v) const;

    /// Number of leader-table entries, exactly 2^(n-k): the count of
    /// correctable error patterns.
    std::size_t leader_count() const { return leaders_.size(); }

    /// Minimum-weight coset leader for the given syndrome (lexicographic
    /// tie-break among equal-weight coset members).
    BitVector coset_leader(const BitVector& syndrome) const;

    /// Histogram of leader weights: entry w = number of cosets whose leader
    /// has weight w.  Drives the closed-form reconciliation failure rate.
    std::vector<std::size_t> leader_weight_histogram() const;

    // --- single-word fast path (valid because n <= 48 < 64) ---

    std::uint64_t encode_word(std::uint64_t msg_bits) const;
    std::uint64_t syndrome_word(std::uint64_t v) const;
    std::uint64_t decode_word(std::uint64_t v) const;  // nearest codeword
    std::uint64_t leader_word(std::uint64_t syndrome_bits) const { return leaders_[syndrome_bits]; }

    std::span<const std::uint64_t> generator_row_words() const { return g_rows_; }

private:
    LinearCode(BitMatrix g, BitMatrix h);

    std::size_t n_ = 0, k_ = 0, d_ = 0, t_ = 0;
    BitMatrix g_, h_;
    std::vector<std::uint64_t> g_rows_;   // generator rows, packed
    std::vector<std::uint64_t> h_cols_;   // column i of H as an (n-k)-bit word
    std::vector<std::uint64_t> leaders_;  // syndrome value -> leader, packed
};

namespace kernels {

/// Minimum Hamming weight over all nonzero codewords spanned by the packed
/// generator rows (Gray-code scan of all 2^k combinations).
std::size_t min_codeword_weight_serial(std::span<const std::uint64_t> g_rows);
std::size_t min_codeword_weight(std::span<const std::uint64_t> g_rows);  // OpenMP

}  // namespace kernels

}  // namespace compcode
