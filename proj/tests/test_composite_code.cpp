#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "compcode/composite_code.hpp"

using namespace compcode;

namespace {

std::vector<BitVector> all_codewords(const LinearCode& code) {
    std::vector<BitVector> words;
    for (std::uint64_t m = 0; m < (1ull << code.k()); ++m) {
        BitVector msg(code.k());
        for (std::size_t j = 0; j < code.k(); ++j)
            if ((m >> j) & 1u) msg.set(j, true);
        words.push_back(vec_mat_mul(msg, code.generator()));
    }
    return words;
}

CompositeCode hamming_simplex() { return {LinearCode::hamming(3), LinearCode::simplex(3)}; }
CompositeCode rm_pair() { return {LinearCode::reed_muller(1, 3), LinearCode::reed_muller(0, 3)}; }

}  // namespace

TEST_SUITE("composite") {

TEST_CASE("hamming/simplex pair: one key bit, two cosets") {
    const CompositeCode cc = hamming_simplex();
    CHECK(cc.n() == 7);
    CHECK(cc.key_len() == 1);
    CHECK(cc.coset_count() == 2);
    // the nesting check behind the constructor: every simplex generator row
    // really is a Hamming codeword
    for (std::size_t r = 0; r < cc.c2().k(); ++r)
        CHECK(cc.c1().contains(cc.c2().generator().row(r)));
    // rows of G2 plus rows of Q form a basis of C1
    BitMatrix basis = cc.c2().generator();
    for (std::size_t r = 0; r < cc.coset_generator().rows(); ++r)
        basis.append_row(cc.coset_generator().row(r));
    CHECK(rref(basis).rank == cc.c1().k());
    for (std::size_t r = 0; r < cc.coset_generator().rows(); ++r)
        CHECK(cc.c1().contains(cc.coset_generator().row(r)));
}

TEST_CASE("reed-muller pair: three key bits, eight cosets") {
    const CompositeCode cc = rm_pair();
    CHECK(cc.n() == 8);
    CHECK(cc.key_len() == 3);
    CHECK(cc.coset_count() == 8);
}

TEST_CASE("all-ones is a hamming codeword, so repetition(7) nests") {
    const CompositeCode cc(LinearCode::hamming(3), LinearCode::repetition(7));
    CHECK(cc.key_len() == 3);
    CHECK(LinearCode::hamming(3).contains(BitVector::ones(7)));
}

TEST_CASE("nesting and shape errors") {
    // all-ones has weight 7, simplex codewords have weight 0 or 4
    CHECK_THROWS_AS(CompositeCode(LinearCode::simplex(3), LinearCode::repetition(7)), NestingError);
    // k2 >= k1
    CHECK_THROWS_AS(CompositeCode(LinearCode::simplex(3), LinearCode::hamming(3)), ConstructionError);
    // block length mismatch
    CHECK_THROWS_AS(CompositeCode(LinearCode::hamming(3), LinearCode::reed_muller(0, 3)), DimensionError);
}

TEST_CASE("codewords of the inner code carry the all-zero key") {
    const CompositeCode cc = hamming_simplex();
    for (const auto& w : all_codewords(cc.c2())) {
        CHECK(cc.extract_key(w).bits.is_zero());
        CHECK(cc.extract_key(w).index() == 0);
    }
}

TEST_CASE("key extraction is constant on cosets of the inner code") {
    for (const auto& cc : {hamming_simplex(), rm_pair()}) {
        const auto inner = all_codewords(cc.c2());
        for (const auto& u : all_codewords(cc.c1())) {
            const KeyBits key = cc.extract_key(u);
            for (const auto& w : inner) CHECK(cc.extract_key(u ^ w) == key);
        }
    }
}

TEST_CASE("every weight-3 hamming codeword carries key 1") {
    const CompositeCode cc = hamming_simplex();
    std::size_t weight3 = 0;
    for (const auto& u : all_codewords(cc.c1())) {
        if (u.weight() != 3) continue;
        ++weight3;
        CHECK(cc.extract_key(u).str() == "1");
    }
    CHECK(weight3 == 7);
    // ... and all-ones completes that coset
    CHECK(cc.extract_key(BitVector::ones(7)).str() == "1");
}

TEST_CASE("extract_key rejects non-members") {
    const CompositeCode cc = hamming_simplex();
    // a weight-1 vector is never a hamming codeword
    CHECK_THROWS_AS(cc.extract_key(BitVector::unit(7, 0)), MembershipError);
    CHECK_THROWS_AS(cc.extract_key(BitVector::zeros(8)), DimensionError);
}

TEST_CASE("coset representatives: zero, minimality, round trip") {
    SUBCASE("representative 0 is the zero vector") {
        CHECK(hamming_simplex().coset_representative(0).is_zero());
        CHECK(rm_pair().coset_representative(0).is_zero());
    }

    SUBCASE("hamming/simplex representative 1 is the lex-least weight-3 codeword") {
        const CompositeCode cc = hamming_simplex();
        BitVector expected = BitVector::ones(7);
        for (const auto& u : all_codewords(cc.c1()))
            if (u.weight() == 3 && lex_less(u, expected)) expected = u;
        CHECK(cc.coset_representative(1) == expected);
    }

    SUBCASE("each representative is minimum weight in its coset") {
        const CompositeCode cc = rm_pair();
        const auto inner = all_codewords(cc.c2());
        for (std::uint64_t a = 0; a < cc.coset_count(); ++a) {
            const BitVector rep = cc.coset_representative(a);
            for (const auto& w : inner) {
                const BitVector member = rep ^ w;
                CHECK(rep.weight() <= member.weight());
                if (member.weight() == rep.weight()) CHECK_FALSE(lex_less(member, rep));
            }
        }
    }

    SUBCASE("round trip through extract_key") {
        for (const auto& cc : {hamming_simplex(), rm_pair()}) {
            for (std::uint64_t a = 0; a < cc.coset_count(); ++a) {
                CHECK(cc.extract_key(cc.coset_representative(a)) == KeyBits::from_index(cc.key_len(), a));
                CHECK(cc.extract_key(cc.coset_representative(a)).index() == a);
            }
        }
    }

    SUBCASE("out of range index") {
        CHECK_THROWS_AS(hamming_simplex().coset_representative(2), RangeError);
    }
}

TEST_CASE("representative scan kernels agree, serial vs parallel") {
    const CompositeCode cc(LinearCode::hamming(4), LinearCode::repetition(15));
    std::vector<std::uint64_t> q_rows;
    for (std::size_t r = 0; r < cc.coset_generator().rows(); ++r)
        q_rows.push_back(cc.coset_generator().row(r).low_word());
    std::vector<std::uint64_t> serial(cc.coset_count()), parallel(cc.coset_count());
    kernels::coset_representative_scan_serial(q_rows, cc.c2().generator_row_words(), serial);
    kernels::coset_representative_scan(q_rows, cc.c2().generator_row_words(), parallel);
    CHECK(serial == parallel);
    for (std::uint64_t a = 0; a < cc.coset_count(); ++a)
        CHECK(cc.representative_word(a) == serial[a]);
}

TEST_CASE("enumerate_ball basics") {
    const CompositeCode cc = rm_pair();
    SUBCASE("radius zero around the origin") {
        const auto ball = cc.enumerate_ball(BitVector::zeros(8), 0);
        REQUIRE(ball.size() == 1);
        CHECK(ball[0].is_zero());
    }
    SUBCASE("nonzero RM(1,3) codewords have weight at least 4") {
        const auto ball = cc.enumerate_ball(BitVector::zeros(8), 3);
        REQUIRE(ball.size() == 1);
        CHECK(ball[0].is_zero());
    }
    SUBCASE("output is sorted lexicographically and complete") {
        const auto ball = cc.enumerate_ball(BitVector::from_string("00001111"), 4);
        CHECK(std::is_sorted(ball.begin(), ball.end(),
                             [](const BitVector& a, const BitVector& b) { return lex_less(a, b); }));
        std::size_t direct = 0;
        for (const auto& u : all_codewords(cc.c1()))
            if (hamming_distance(u, BitVector::from_string("00001111")) <= 4) ++direct;
        CHECK(ball.size() == direct);
    }
}

TEST_CASE("perfectness makes every radius-1 hamming ball a singleton") {
    const CompositeCode cc = hamming_simplex();
    for (std::uint64_t v = 0; v < (1ull << 7); ++v) {
        BitVector center(7);
        for (std::size_t i = 0; i < 7; ++i)
            if ((v >> i) & 1u) center.set(i, true);
        CHECK(cc.enumerate_ball(center, 1).size() == 1);
    }
}

TEST_CASE("ball index distinctness verifies exhaustively") {
    SUBCASE("hamming pair over all 128 centers") {
        const VerificationReport report = hamming_simplex().verify_distinct_indices();
        CHECK(report.checked == 128);
        CHECK(report.ok());
    }
    SUBCASE("rm pair over all 256 centers") {
        const VerificationReport report = rm_pair().verify_distinct_indices();
        CHECK(report.checked == 256);
        CHECK(report.ok());
    }
    SUBCASE("serial and parallel scans agree") {
        for (const auto& cc : {hamming_simplex(), rm_pair()}) {
            const VerificationReport a = cc.verify_distinct_indices();
            const VerificationReport b = cc.verify_distinct_indices_serial();
            CHECK(a.checked == b.checked);
            CHECK(a.violations.size() == b.violations.size());
        }
    }
}

TEST_CASE("coset disjointness: class counts and sizes") {
    SUBCASE("hamming pair: 2 classes of 8") {
        const CompositeCode cc = hamming_simplex();
        const VerificationReport report = cc.verify_coset_disjointness();
        CHECK(report.checked == 16);
        CHECK(report.ok());
        std::map<std::uint64_t, std::size_t> sizes;
        for (const auto& u : all_codewords(cc.c1())) ++sizes[cc.extract_key(u).index()];
        REQUIRE(sizes.size() == 2);
        for (const auto& [key, count] : sizes) CHECK(count == 8);
    }
    SUBCASE("rm pair: 8 classes of 2") {
        const CompositeCode cc = rm_pair();
        const VerificationReport report = cc.verify_coset_disjointness();
        CHECK(report.checked == 16);
        CHECK(report.ok());
        std::map<std::uint64_t, std::size_t> sizes;
        std::size_t total = 0;
        for (const auto& u : all_codewords(cc.c1())) {
            ++sizes[cc.extract_key(u).index()];
            ++total;
        }
        REQUIRE(sizes.size() == 8);
        for (const auto& [key, count] : sizes) CHECK(count == 2);
        CHECK(total == 16);  // class sizes sum to 2^k1
    }
}

TEST_CASE("same key implies distance at least d(C2)") {
    for (const auto& cc : {hamming_simplex(), rm_pair()}) {
        const auto words = all_codewords(cc.c1());
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                if (cc.extract_key(words[i]) != cc.extract_key(words[j])) continue;
                CHECK(hamming_distance(words[i], words[j]) >= cc.c2().min_distance());
            }
        }
    }
}

TEST_CASE("keys are exactly uniform over the outer code") {
    const CompositeCode cc = rm_pair();
    std::vector<std::size_t> counts(cc.coset_count(), 0);
    for (const auto& u : all_codewords(cc.c1())) ++counts[cc.extract_key(u).index()];
    for (auto c : counts) CHECK(c == (1ull << cc.c2().k()));
}

TEST_CASE("algebraic and decode-based extraction agree on every codeword") {
    for (const auto& cc : {hamming_simplex(), rm_pair()}) {
        for (const auto& u : all_codewords(cc.c1()))
            CHECK(cc.extract_key(u) == cc.extract_key_by_decoding(u));
    }
}

TEST_CASE("a length-16 pair passes both exhaustive verifications") {
    const CompositeCode cc(LinearCode::reed_muller(1, 4), LinearCode::reed_muller(0, 4));
    CHECK(cc.key_len() == 4);
    CHECK(cc.c2().t() == 7);
    const VerificationReport distinct = cc.verify_distinct_indices();
    CHECK(distinct.checked == 65536);
    CHECK(distinct.ok());
    const VerificationReport disjoint = cc.verify_coset_disjointness();
    CHECK(disjoint.checked == 32);
    CHECK(disjoint.ok());
}

TEST_CASE("Str2 rendering is fixed width, most significant bit first") {
    const KeyBits kb = KeyBits::from_index(3, 5);
    CHECK(kb.str() == "101");
    CHECK(kb.index() == 5);
    CHECK(KeyBits::from_index(3, 0).str() == "000");
    CHECK(KeyBits::from_index(1, 1).str() == "1");
}

}  // TEST_SUITE
