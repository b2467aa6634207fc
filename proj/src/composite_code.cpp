#include "compcode/composite_code.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "compcode/errors.hpp"

namespace compcode {

namespace {

std::uint64_t combine_rows(std::span<const std::uint64_t> rows, std::uint64_t mask) {
    std::uint64_t acc = 0;
    while (mask) {
        acc ^= rows[static_cast<std::size_t>(std::countr_zero(mask))];
        mask &= mask - 1;
    }
    return acc;
}

// Str2 maps key bit j to Q row j, so index bit (key_len-1-j) selects row j.
std::uint64_t row_mask_for_index(std::uint64_t a, std::size_t key_len) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < key_len; ++j)
        if ((a >> (key_len - 1 - j)) & 1u) mask |= 1ull << j;
    return mask;
}

bool better_leader(std::uint64_t cand, std::uint64_t best) {
    const int wc = std::popcount(cand);
    const int wb = std::popcount(best);
    if (wc != wb) return wc < wb;
    return gf2::lex_less_word(cand, best);
}

}  // namespace

namespace kernels {

namespace {

std::uint64_t coset_leader_of(std::uint64_t base, std::span<const std::uint64_t> g2_rows) {
    const std::uint64_t total = 1ull << g2_rows.size();
    std::uint64_t word = 0;
    std::uint64_t best = base;
    for (std::uint64_t m = 1; m < total; ++m) {
        word ^= g2_rows[static_cast<std::size_t>(std::countr_zero(m))];
        const std::uint64_t cand = base ^ word;
        if (better_leader(cand, best)) best = cand;
    }
    return best;
}

}  // namespace

void coset_representative_scan_serial(std::span<const std::uint64_t> q_rows,
                                      std::span<const std::uint64_t> g2_rows,
                                      std::vector<std::uint64_t>& out) {
    for (std::uint64_t a = 0; a < out.size(); ++a)
        out[a] = coset_leader_of(combine_rows(q_rows, row_mask_for_index(a, q_rows.size())), g2_rows);
}

void coset_representative_scan(std::span<const std::uint64_t> q_rows,
                               std::span<const std::uint64_t> g2_rows,
                               std::vector<std::uint64_t>& out) {
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < count; ++a)
        out[a] = coset_leader_of(
            combine_rows(q_rows, row_mask_for_index(static_cast<std::uint64_t>(a), q_rows.size())), g2_rows);
}

}  // namespace kernels

CompositeCode::CompositeCode(LinearCode c1, LinearCode c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
    if (c1_.n() != c2_.n())
        throw DimensionError("composite code requires equal block lengths");
    if (c2_.k() >= c1_.k())
        throw ConstructionError("composite code requires k2 < k1");
    key_len_ = c1_.k() - c2_.k();
    if (key_len_ > 24)
        throw ResourceError("key length " + std::to_string(key_len_) + " exceeds the enumeration budget of 24");

    for (std::size_t r = 0; r < c2_.k(); ++r)
        if (!c1_.contains(c2_.generator().row(r)))
            throw NestingError("row " + std::to_string(r) + " of the inner generator is not a codeword of the outer code");

    // extend a basis of C2 to a basis of C1: walk the reduced rows of G1 and
    // keep those independent of C2's row space
    const BitMatrix g1r = rref(c1_.generator()).reduced;
    BitMatrix working = rref(c2_.generator()).reduced;
    for (std::size_t r = 0; r < g1r.rows() && q_.rows() < key_len_; ++r) {
        // reduce against the working basis (kept in rref, so one pass over
        // its pivot rows suffices)
        BitVector residual = g1r.row(r);
        for (std::size_t i = 0; i < working.rows(); ++i) {
            const BitVector& row = working.row(i);
            std::size_t lead = 0;
            while (lead < row.size() && !row.get(lead)) ++lead;
            if (lead < row.size() && residual.get(lead)) residual ^= row;
        }
        if (!residual.is_zero()) {
            q_.append_row(g1r.row(r));
            working.append_row(residual);
            working = rref(working).reduced;
        }
    }
    if (q_.rows() != key_len_)
        throw ConstructionError("failed to extend the inner basis to the outer code");

    // solver: B = [G2 ; Q], T . B = rref(B), coefficients x = y . T with
    // y read off the pivot columns
    const std::size_t k1 = c1_.k();
    std::vector<BitVector> b_rows;
    b_rows.reserve(k1);
    for (std::size_t r = 0; r < c2_.k(); ++r) b_rows.push_back(c2_.generator().row(r));
    for (std::size_t r = 0; r < key_len_; ++r) b_rows.push_back(q_.row(r));

    // run rref on [B | I] to capture the transform
    BitMatrix augmented(k1, n() + k1);
    for (std::size_t r = 0; r < k1; ++r) {
        for (std::size_t c = 0; c < n(); ++c)
            if (b_rows[r].get(c)) augmented.set(r, c, true);
        augmented.set(r, n() + r, true);
    }
    RrefResult aug = rref(augmented);
    pivots_.clear();
    for (auto p : aug.pivots)
        if (p < n()) pivots_.push_back(p);
    if (pivots_.size() != k1)
        throw ConstructionError("composite basis is rank-deficient");

    transform_.assign(k1, 0);
    for (std::size_t r = 0; r < k1; ++r)
        for (std::size_t c = 0; c < k1; ++c)
            if (aug.reduced.get(r, n() + c)) transform_[r] |= 1ull << c;

    reps_.assign(std::size_t{1} << key_len_, 0);
    std::vector<std::uint64_t> q_words;
    for (std::size_t r = 0; r < key_len_; ++r) q_words.push_back(q_.row(r).low_word());
    kernels::coset_representative_scan(q_words, c2_.generator_row_words(), reps_);
}

std::uint64_t CompositeCode::key_index_of_word(std::uint64_t u) const {
    // y_i = u[pivot_i]; x = y . T; key index read from the Q coefficients
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        if ((u >> pivots_[i]) & 1u) x ^= transform_[i];
    const std::size_t k2 = c2_.k();
    std::uint64_t a = 0;
    for (std::size_t j = 0; j < key_len_; ++j)
        if ((x >> (k2 + j)) & 1u) a |= 1ull << (key_len_ - 1 - j);
    return a;
}

KeyBits CompositeCode::extract_key(const BitVector& u) const {
    if (u.size() != n()) throw DimensionError("extract_key: vector length must equal n");
    if (!c1_.contains(u)) throw MembershipError("extract_key: vector is not a codeword of the outer code");
    return KeyBits::from_index(key_len_, key_index_of_word(u.low_word()));
}

KeyBits CompositeCode::extract_key_by_decoding(const BitVector& u) const {
    if (u.size() != n()) throw DimensionError("extract_key_by_decoding: vector length must equal n");
    if (!c1_.contains(u)) throw MembershipError("extract_key_by_decoding: vector is not a codeword of the outer code");
    const std::uint64_t residual = u.low_word() ^ c2_.decode_word(u.low_word());
    for (std::uint64_t a = 0; a < reps_.size(); ++a)
        if (reps_[a] == residual) return KeyBits::from_index(key_len_, a);
    throw MembershipError("extract_key_by_decoding: residual is not a stored coset representative");
}

BitVector CompositeCode::coset_representative(std::uint64_t a) const {
    if (a >= reps_.size()) throw RangeError("coset_representative: index out of range");
    return BitVector::from_word(n(), reps_[a]);
}

std::vector<BitVector> CompositeCode::enumerate_ball(const BitVector& center, std::size_t radius) const {
    if (center.size() != n()) throw DimensionError("enumerate_ball: center length must equal n");
    const std::uint64_t center_word = center.low_word();
    const auto rows = c1_.generator_row_words();
    const std::uint64_t total = 1ull << rows.size();
    std::vector<std::uint64_t> hits;
    std::uint64_t word = 0;
    if (std::popcount(center_word) <= static_cast<int>(radius)) hits.push_back(0);
    for (std::uint64_t m = 1; m < total; ++m) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(m))];
        if (std::popcount(word ^ center_word) <= static_cast<int>(radius)) hits.push_back(word);
    }
    std::sort(hits.begin(), hits.end(), gf2::lex_less_word);
    std::vector<BitVector> out;
    out.reserve(hits.size());
    for (auto h : hits) out.push_back(BitVector::from_word(n(), h));
    return out;
}

namespace {

// scan one center: collect (key, codeword) for every C1 codeword within
// radius, then sort by key so duplicates sit next to each other.  The key
// index is linear in the codeword, so the Gray-code scan can carry it along
// with one extra xor per step (row_keys[j] = key of generator row j).
void check_center(const CompositeCode& cc, std::span<const std::uint64_t> rows,
                  std::span<const std::uint64_t> row_keys, std::uint64_t center, std::size_t radius,
                  std::vector<std::pair<std::uint64_t, std::uint64_t>>& scratch,
                  std::vector<Violation>& out) {
    const std::uint64_t total = 1ull << rows.size();
    scratch.clear();
    std::uint64_t word = 0;
    std::uint64_t key = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (m) {
            const auto j = static_cast<std::size_t>(std::countr_zero(m));
            word ^= rows[j];
            key ^= row_keys[j];
        }
        if (std::popcount(word ^ center) > static_cast<int>(radius)) continue;
        scratch.emplace_back(key, word);
    }
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t i = 1; i < scratch.size(); ++i) {
        if (scratch[i].first != scratch[i - 1].first) continue;
        out.push_back({"ball_distinct_indices",
                       "codewords " + BitVector::from_word(cc.n(), scratch[i - 1].second).str() + " and " +
                           BitVector::from_word(cc.n(), scratch[i].second).str() + " share key index " +
                           std::to_string(scratch[i].first) + " inside the ball around " +
                           BitVector::from_word(cc.n(), center).str(),
                       center});
    }
}

}  // namespace

VerificationReport CompositeCode::verify_distinct_indices_serial() const {
    if (n() > 16) throw ResourceError("verify_distinct_indices: exhaustive mode requires n <= 16");
    const std::uint64_t centers = 1ull << n();
    const auto rows = c1_.generator_row_words();
    std::vector<std::uint64_t> row_keys;
    for (auto row : rows) row_keys.push_back(key_index_of_word(row));
    VerificationReport report;
    report.checked = centers;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> scratch;
    for (std::uint64_t v = 0; v < centers; ++v)
        check_center(*this, rows, row_keys, v, c2_.t(), scratch, report.violations);
    return report;
}

VerificationReport CompositeCode::verify_distinct_indices() const {
    if (n() > 16) throw ResourceError("verify_distinct_indices: exhaustive mode requires n <= 16");
    const std::uint64_t centers = 1ull << n();
    const auto rows = c1_.generator_row_words();
    std::vector<std::uint64_t> row_keys;
    for (auto row : rows) row_keys.push_back(key_index_of_word(row));
    VerificationReport report;
    report.checked = centers;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::vector<std::vector<Violation>> partial(threads);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> scratch(threads);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(centers); ++v) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        check_center(*this, rows, row_keys, static_cast<std::uint64_t>(v), c2_.t(), scratch[tid],
                     partial[tid]);
    }
    for (auto& chunk : partial)
        report.violations.insert(report.violations.end(), chunk.begin(), chunk.end());
    // deterministic order regardless of scheduling
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const Violation& a, const Violation& b) { return a.center < b.center; });
    return report;
}

VerificationReport CompositeCode::verify_coset_disjointness() const {
    const auto rows = c1_.generator_row_words();
    const std::uint64_t total = 1ull << rows.size();
    VerificationReport report;
    report.checked = total;

    // two labelings of every C1 codeword: algebraic key index vs C2 syndrome
    std::vector<std::uint64_t> class_size(coset_count(), 0);
    std::vector<std::uint64_t> syndrome_of_class(coset_count(), 0);
    std::vector<char> class_seen(coset_count(), 0);

    std::uint64_t word = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (m) word ^= rows[static_cast<std::size_t>(std::countr_zero(m))];
        const std::uint64_t key = key_index_of_word(word);
        const std::uint64_t synd = c2_.syndrome_word(word);
        ++class_size[key];
        if (!class_seen[key]) {
            class_seen[key] = 1;
            syndrome_of_class[key] = synd;
        } else if (syndrome_of_class[key] != synd) {
            report.violations.push_back({"coset_disjointness",
                                         "key index " + std::to_string(key) +
                                             " spans two different C2 cosets (codeword " +
                                             BitVector::from_word(n(), word).str() + ")",
                                         word});
        }
    }

    const std::uint64_t expected = 1ull << c2_.k();
    for (std::uint64_t a = 0; a < class_size.size(); ++a) {
        if (class_size[a] != expected)
            report.violations.push_back({"coset_disjointness",
                                         "class " + std::to_string(a) + " has " + std::to_string(class_size[a]) +
                                             " members, expected " + std::to_string(expected),
                                         a});
    }
    // distinct classes must carry distinct syndromes (disjointness)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted;  // (syndrome, class)
    sorted.reserve(coset_count());
    for (std::uint64_t a = 0; a < coset_count(); ++a)
        if (class_seen[a]) sorted.emplace_back(syndrome_of_class[a], a);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first)
            report.violations.push_back({"coset_disjointness",
                                         "classes " + std::to_string(sorted[i - 1].second) + " and " +
                                             std::to_string(sorted[i].second) + " share a C2 coset",
                                         sorted[i].second});
    return report;
}

}  // namespace compcode
