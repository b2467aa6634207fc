#include <doctest.h>

#include "compcode/bitmat.hpp"
#include "compcode/bitvec.hpp"
#include "compcode/linear_code.hpp"
#include "compcode/rng.hpp"

using namespace compcode;

namespace {

BitVector random_vector(std::size_t n, SplitMix64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_u64() & 1u) v.set(i, true);
    return v;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next_u64() & 1u) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("weight counts one bits") {
    CHECK(BitVector::from_string("0000000").weight() == 0);
    CHECK(BitVector::from_string("1011").weight() == 3);
    CHECK(BitVector::from_string("1111111").weight() == 7);
}

TEST_CASE("string round trip fixes the bit order") {
    const BitVector v = BitVector::from_string("1011");
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.str() == "1011");
    CHECK_THROWS_AS(BitVector::from_string("10x1"), ParseError);
}

TEST_CASE("hamming distance") {
    const BitVector x = BitVector::from_string("1010");
    CHECK(hamming_distance(x, x) == 0);
    CHECK(hamming_distance(BitVector::from_string("0000"), BitVector::from_string("1111")) == 4);
    CHECK(hamming_distance(x, BitVector::from_string("0110")) == 2);
    CHECK_THROWS_AS(hamming_distance(x, BitVector::from_string("101")), DimensionError);
}

TEST_CASE("xor with itself is zero and distance to zero is weight") {
    SplitMix64 rng({42, 0});
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + rng.next_below(100);
        const BitVector v = random_vector(n, rng);
        CHECK((v ^ v).is_zero());
        CHECK(hamming_distance(v, BitVector::zeros(n)) == v.weight());
    }
}

TEST_CASE("triangle inequality, sampled") {
    SplitMix64 rng({43, 0});
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.next_below(32);
        const BitVector x = random_vector(n, rng);
        const BitVector y = random_vector(n, rng);
        const BitVector z = random_vector(n, rng);
        CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
        CHECK(hamming_distance(x, y) == hamming_distance(y, x));
        CHECK(hamming_distance(x, y) == weight(x ^ y));
    }
}

TEST_CASE("lex_less follows the textual order") {
    CHECK(lex_less(BitVector::from_string("0001"), BitVector::from_string("0010")));
    CHECK(lex_less(BitVector::from_string("0110"), BitVector::from_string("1010")));
    CHECK_FALSE(lex_less(BitVector::from_string("1010"), BitVector::from_string("1010")));
    // agrees with std::string comparison on random pairs
    SplitMix64 rng({44, 0});
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.next_below(70);
        const BitVector a = random_vector(n, rng);
        const BitVector b = random_vector(n, rng);
        CHECK(lex_less(a, b) == (a.str() < b.str()));
    }
}

TEST_CASE("mat_mul identity and basic product") {
    SplitMix64 rng({45, 0});
    const BitMatrix a = random_matrix(5, 5, rng);
    CHECK(mat_mul(a, BitMatrix::identity(5)) == a);
    CHECK(mat_mul(BitMatrix::identity(5), a) == a);

    const BitMatrix left = BitMatrix::from_strings({"11", "01"});
    const BitMatrix right = BitMatrix::from_strings({"1", "1"});
    const BitMatrix expect = BitMatrix::from_strings({"0", "1"});
    CHECK(mat_mul(left, right) == expect);

    CHECK_THROWS_AS(mat_mul(left, BitMatrix(3, 2)), DimensionError);
}

TEST_CASE("generator and parity check of hamming(3) are orthogonal") {
    const LinearCode code = LinearCode::hamming(3);
    const BitMatrix product = mat_mul(code.generator(), code.parity_check().transposed());
    CHECK(product.rows() == 4);
    CHECK(product.cols() == 3);
    CHECK(product.is_zero());
}

TEST_CASE("matrix product is associative with vectors") {
    SplitMix64 rng({46, 0});
    for (int i = 0; i < 20; ++i) {
        const std::size_t p = 1 + rng.next_below(8);
        const std::size_t q = 1 + rng.next_below(8);
        const std::size_t r = 1 + rng.next_below(8);
        const BitMatrix a = random_matrix(p, q, rng);
        const BitMatrix b = random_matrix(q, r, rng);
        const BitVector v = random_vector(p, rng);
        // (v.A).B == v.(A.B)
        CHECK(vec_mat_mul(vec_mat_mul(v, a), b) == vec_mat_mul(v, mat_mul(a, b)));
        // column form through the transposed product: (A.B).w == A.(B.w)
        const BitVector w = random_vector(r, rng);
        CHECK(mul_transposed(w, mat_mul(a, b)) == mul_transposed(mul_transposed(w, b), a));
    }
}

TEST_CASE("rref ranks") {
    CHECK(rref(BitMatrix::identity(4)).rank == 4);
    const BitMatrix dup = BitMatrix::from_strings({"101", "101"});
    CHECK(rref(dup).rank == 1);
    CHECK(rref(LinearCode::reed_muller(1, 3).generator()).rank == 4);
}

TEST_CASE("rref is idempotent and preserves the row space") {
    SplitMix64 rng({47, 0});
    for (int i = 0; i < 30; ++i) {
        const std::size_t rows = 1 + rng.next_below(8);
        const std::size_t cols = 1 + rng.next_below(12);
        const BitMatrix a = random_matrix(rows, cols, rng);
        const RrefResult first = rref(a);
        CHECK(rref(first.reduced).reduced == first.reduced);
        CHECK(first.pivots.size() == first.rank);
        // every original row must reduce to zero against the echelon rows
        for (std::size_t r = 0; r < rows; ++r) {
            BitVector residual = a.row(r);
            for (std::size_t i2 = 0; i2 < first.rank; ++i2)
                if (residual.get(first.pivots[i2])) residual ^= first.reduced.row(i2);
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("nullspace basis spans the kernel") {
    const BitMatrix single = BitMatrix::from_strings({"11"});
    const BitMatrix basis = nullspace_basis(single);
    REQUIRE(basis.rows() == 1);
    CHECK(basis.row(0) == BitVector::from_string("11"));

    CHECK(nullspace_basis(BitMatrix::identity(5)).rows() == 0);

    const BitMatrix g = LinearCode::hamming(3).generator();
    const BitMatrix null_g = nullspace_basis(g);
    CHECK(null_g.rows() == 3);
    CHECK(mat_mul(g, null_g.transposed()).is_zero());
}

TEST_CASE("nullspace dimension equals cols minus rank on random matrices") {
    SplitMix64 rng({48, 0});
    for (int i = 0; i < 30; ++i) {
        const std::size_t rows = 1 + rng.next_below(8);
        const std::size_t cols = 1 + rng.next_below(12);
        const BitMatrix a = random_matrix(rows, cols, rng);
        const BitMatrix ns = nullspace_basis(a);
        CHECK(ns.rows() == cols - rref(a).rank);
        if (ns.rows() > 0) {
            CHECK(mat_mul(a, ns.transposed()).is_zero());
            CHECK(rref(ns).rank == ns.rows());
        }
    }
}

TEST_CASE("matrix text rendering is newline separated rows") {
    const BitMatrix m = BitMatrix::from_strings({"101", "010"});
    CHECK(m.str() == "101\n010");
}

}  // TEST_SUITE
