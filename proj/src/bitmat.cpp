#include "compcode/bitmat.hpp"

#include <bit>

namespace compcode {

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    if (rows.empty()) return m;
    m.cols_ = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw DimensionError("matrix rows must have equal length");
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (auto s : rows) parsed.push_back(BitVector::from_string(s));
    return from_rows(std::move(parsed));
}

void BitMatrix::append_row(BitVector row) {
    if (rows_.empty())
        cols_ = row.size();
    else if (row.size() != cols_)
        throw DimensionError("appended row length does not match matrix width");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::string BitMatrix::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows(); ++r) {
        if (r) out += '\n';
        out += rows_[r].str();
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    BitMatrix result(a.rows(), b.cols());
    // row i of the product is the xor of the b-rows selected by row i of a
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) result.row(i) ^= b.row(k);
    return result;
}

BitVector vec_mat_mul(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw DimensionError("vec_mat_mul: vector length must equal row count");
    BitVector result(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v.get(k)) result ^= m.row(k);
    return result;
}

BitVector mul_transposed(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.cols()) throw DimensionError("mul_transposed: vector length must equal column count");
    BitVector result(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) {
        std::uint64_t acc = 0;
        const BitVector& row = m.row(j);
        for (std::size_t w = 0; w < row.word_count(); ++w) acc ^= v.word(w) & row.word(w);
        if (std::popcount(acc) & 1) result.set(j, true);
    }
    return result;
}

RrefResult rref(const BitMatrix& a) {
    RrefResult res;
    res.reduced = a;
    BitMatrix& m = res.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !m.get(r, col)) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(pivot_row, r);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != pivot_row && m.get(i, col)) m.xor_row_into(i, pivot_row);
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

BitMatrix nullspace_basis(const BitMatrix& a) {
    const RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector v(a.cols());
        v.set(free_col, true);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.reduced.get(i, free_col)) v.set(r.pivots[i], true);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return BitMatrix(0, a.cols());
    return rref(BitMatrix::from_rows(std::move(basis))).reduced;
}

}  // namespace compcode
