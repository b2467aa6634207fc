#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "compcode/bitvec.hpp"

namespace compcode {

/// Dense GF(2) matrix, stored as a list of row BitVectors.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }

    void xor_row_into(std::size_t dst, std::size_t src) { rows_[dst] ^= rows_[src]; }
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
    void append_row(BitVector row);

    BitMatrix transposed() const;

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.is_zero()) return false;
        return true;
    }

    bool operator==(const BitMatrix&) const = default;

    /// Newline-separated rows of 0/1 characters.
    std::string str() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Standard product over GF(2): addition = xor, multiplication = and.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Row vector times matrix: (1 x r) . (r x c) -> (1 x c).
BitVector vec_mat_mul(const BitVector& v, const BitMatrix& m);

/// v . m^T without materializing the transpose; v.size() must equal m.cols().
/// Bit j of the result is the GF(2) dot product of v with row j of m.
BitVector mul_transposed(const BitVector& v, const BitMatrix& m);

struct RrefResult {
    BitMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per reduced row, ascending
};

/// Reduced row-echelon form over GF(2).  Pivot choice is deterministic:
/// first nonzero column scanning left to right, first available row.
RrefResult rref(const BitMatrix& a);

/// Basis of the right nullspace {v : a . v^T = 0}, one vector per row,
/// canonicalized to reduced row-echelon form.  Row count = cols - rank(a).
BitMatrix nullspace_basis(const BitMatrix& a);

}  // namespace compcode
