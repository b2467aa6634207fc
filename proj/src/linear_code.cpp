#include "compcode/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>

#include "compcode/errors.hpp"

namespace compcode {

namespace {

constexpr std::size_t kEnumerationBudget = 24;

std::uint64_t reverse_bits64(std::uint64_t x) {
    x = ((x & 0x5555555555555555ull) << 1) | ((x >> 1) & 0x5555555555555555ull);
    x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
    x = ((x & 0x0F0F0F0F0F0F0F0Full) << 4) | ((x >> 4) & 0x0F0F0F0F0F0F0F0Full);
    x = ((x & 0x00FF00FF00FF00FFull) << 8) | ((x >> 8) & 0x00FF00FF00FF00FFull);
    x = ((x & 0x0000FFFF0000FFFFull) << 16) | ((x >> 16) & 0x0000FFFF0000FFFFull);
    return (x << 32) | (x >> 32);
}

// next integer with the same popcount (Gosper)
std::uint64_t next_same_weight(std::uint64_t v) {
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

std::uint64_t pack_row(const BitVector& row) { return row.low_word(); }

std::uint64_t combine_rows(std::span<const std::uint64_t> rows, std::uint64_t mask) {
    std::uint64_t acc = 0;
    while (mask) {
        acc ^= rows[static_cast<std::size_t>(std::countr_zero(mask))];
        mask &= mask - 1;
    }
    return acc;
}

}  // namespace

namespace kernels {

std::size_t min_codeword_weight_serial(std::span<const std::uint64_t> g_rows) {
    const std::uint64_t total = 1ull << g_rows.size();
    std::uint64_t word = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t m = 1; m < total; ++m) {
        word ^= g_rows[static_cast<std::size_t>(std::countr_zero(m))];
        if (word) best = std::min<std::size_t>(best, std::popcount(word));
    }
    return best;
}

std::size_t min_codeword_weight(std::span<const std::uint64_t> g_rows) {
    const std::uint64_t total = 1ull << g_rows.size();
    unsigned long long best = ~0ull;
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    const std::uint64_t chunk_len = (total + chunks - 1) / chunks;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::uint64_t lo = std::min<std::uint64_t>(c * chunk_len, total);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk_len, total);
        std::uint64_t word = combine_rows(g_rows, lo ^ (lo >> 1));
        if (word) best = std::min<unsigned long long>(best, std::popcount(word));
        for (std::uint64_t m = lo + 1; m < hi; ++m) {
            word ^= g_rows[static_cast<std::size_t>(std::countr_zero(m))];
            if (word) best = std::min<unsigned long long>(best, std::popcount(word));
        }
    }
    return static_cast<std::size_t>(best);
}

}  // namespace kernels

LinearCode::LinearCode(BitMatrix g, BitMatrix h) : g_(std::move(g)), h_(std::move(h)) {
    n_ = g_.cols();
    k_ = g_.rows();
    if (n_ == 0 || k_ == 0) throw ConstructionError("code must have n >= 1 and k >= 1");
    if (k_ > n_) throw ConstructionError("generator has more rows than columns");
    if (k_ > kEnumerationBudget)
        throw ResourceError("k = " + std::to_string(k_) + " exceeds the enumeration budget of 24");
    if (n_ - k_ > kEnumerationBudget)
        throw ResourceError("n - k = " + std::to_string(n_ - k_) + " exceeds the enumeration budget of 24");

    if (rref(g_).rank != k_) throw ConstructionError("generator matrix is rank-deficient");
    if (h_.rows() != n_ - k_ || h_.cols() != n_)
        throw ConstructionError("parity-check matrix has wrong shape");
    if (n_ > k_ && rref(h_).rank != n_ - k_)
        throw ConstructionError("parity-check matrix is rank-deficient");
    if (!mat_mul(g_, h_.transposed()).is_zero())
        throw ConstructionError("generator and parity-check matrices are not orthogonal");

    g_rows_.reserve(k_);
    for (std::size_t r = 0; r < k_; ++r) g_rows_.push_back(pack_row(g_.row(r)));

    h_cols_.assign(n_, 0);
    for (std::size_t j = 0; j < h_.rows(); ++j)
        for (std::size_t i = 0; i < n_; ++i)
            if (h_.get(j, i)) h_cols_[i] |= 1ull << j;

    d_ = kernels::min_codeword_weight(g_rows_);
    t_ = (d_ - 1) / 2;

    // complete decoding table: scan candidate error patterns in increasing
    // weight, lexicographic within a weight class, first hit per syndrome
    const std::size_t syndrome_count = std::size_t{1} << (n_ - k_);
    leaders_.assign(syndrome_count, 0);
    std::vector<char> seen(syndrome_count, 0);
    seen[0] = 1;
    std::size_t found = 1;
    const std::uint64_t space = 1ull << n_;
    for (std::size_t w = 1; w <= n_ && found < syndrome_count; ++w) {
        std::uint64_t msb_value = (1ull << w) - 1;
        while (msb_value < space) {
            const std::uint64_t cand = reverse_bits64(msb_value) >> (64 - n_);
            const std::uint64_t s = syndrome_word(cand);
            if (!seen[s]) {
                seen[s] = 1;
                leaders_[s] = cand;
                if (++found == syndrome_count) break;
            }
            msb_value = next_same_weight(msb_value);
        }
    }
}

BitVector LinearCode::encode(const BitVector& msg) const {
    if (msg.size() != k_) throw DimensionError("encode: message length must equal k");
    return BitVector::from_word(n_, encode_word(msg.low_word()));
}

BitVector LinearCode::syndrome(const BitVector& v) const {
    if (v.size() != n_) throw DimensionError("syndrome: vector length must equal n");
    return BitVector::from_word(n_ - k_, syndrome_word(v.low_word()));
}

DecodeResult LinearCode::decode(const BitVector& v) const {
    if (v.size() != n_) throw DimensionError("decode: vector length must equal n");
    const std::uint64_t word = v.low_word();
    const std::uint64_t leader = leaders_[syndrome_word(word)];
    return {BitVector::from_word(n_, word ^ leader), BitVector::from_word(n_, leader)};
}

bool LinearCode::contains(const BitVector& v) const {
    if (v.size() != n_) throw DimensionError("contains: vector length must equal n");
    return syndrome_word(v.low_word()) == 0;
}

BitVector LinearCode::coset_leader(const BitVector& syndrome) const {
    if (syndrome.size() != n_ - k_) throw DimensionError("coset_leader: syndrome length must equal n - k");
    return BitVector::from_word(n_, leaders_[syndrome.low_word()]);
}

std::vector<std::size_t> LinearCode::leader_weight_histogram() const {
    std::vector<std::size_t> hist(n_ + 1, 0);
    for (auto leader : leaders_) ++hist[static_cast<std::size_t>(std::popcount(leader))];
    return hist;
}

std::uint64_t LinearCode::encode_word(std::uint64_t msg_bits) const {
    return combine_rows(g_rows_, msg_bits);
}

std::uint64_t LinearCode::syndrome_word(std::uint64_t v) const {
    std::uint64_t s = 0;
    while (v) {
        s ^= h_cols_[static_cast<std::size_t>(std::countr_zero(v))];
        v &= v - 1;
    }
    return s;
}

std::uint64_t LinearCode::decode_word(std::uint64_t v) const {
    return v ^ leaders_[syndrome_word(v)];
}

namespace {

// r x (2^r - 1) matrix whose columns are the binary representations of
// 1..n, most significant bit in row 0
BitMatrix hamming_check_matrix(unsigned r) {
    if (r < 2) throw ConstructionError("hamming/simplex: r must be >= 2");
    if (r > 16) throw ResourceError("hamming/simplex: r = " + std::to_string(r) + " is far beyond the enumeration budget");
    const std::size_t n = (std::size_t{1} << r) - 1;
    BitMatrix h(r, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t column_value = j + 1;
        for (unsigned i = 0; i < r; ++i)
            if ((column_value >> (r - 1 - i)) & 1u) h.set(i, j, true);
    }
    return h;
}

}  // namespace

LinearCode LinearCode::hamming(unsigned r) {
    const BitMatrix h = hamming_check_matrix(r);
    const std::size_t n = h.cols();
    if (n - r > kEnumerationBudget)
        throw ResourceError("hamming: k = " + std::to_string(n - r) + " exceeds the enumeration budget of 24");
    return LinearCode(nullspace_basis(h), h);
}

LinearCode LinearCode::simplex(unsigned r) {
    const BitMatrix g = hamming_check_matrix(r);
    if (g.cols() - g.rows() > kEnumerationBudget)
        throw ResourceError("simplex: n - k = " + std::to_string(g.cols() - g.rows()) +
                            " exceeds the enumeration budget of 24");
    return LinearCode(g, nullspace_basis(g));
}

LinearCode LinearCode::reed_muller(unsigned r, unsigned m) {
    if (m > 5 || r > m) throw ConstructionError("reed_muller: requires 0 <= r <= m <= 5");
    const std::size_t n = std::size_t{1} << m;

    // monomial subsets of {1..m} ordered by degree, lexicographic inside a degree
    std::vector<std::vector<unsigned>> monomials;
    for (unsigned deg = 0; deg <= r; ++deg) {
        std::vector<unsigned> combo(deg);
        for (unsigned i = 0; i < deg; ++i) combo[i] = i + 1;
        while (true) {
            monomials.push_back(combo);
            if (deg == 0) break;
            int pos = static_cast<int>(deg) - 1;
            while (pos >= 0 && combo[pos] == m - deg + 1 + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (unsigned i = pos + 1; i < deg; ++i) combo[i] = combo[i - 1] + 1;
        }
    }

    std::vector<BitVector> rows;
    rows.reserve(monomials.size());
    for (const auto& mono : monomials) {
        BitVector row(n);
        for (std::size_t p = 0; p < n; ++p) {
            bool value = true;
            for (unsigned var : mono)
                value = value && ((p >> (m - var)) & 1u);
            if (value) row.set(p, true);
        }
        rows.push_back(std::move(row));
    }
    const BitMatrix g = BitMatrix::from_rows(std::move(rows));
    if (g.rows() > kEnumerationBudget || n - g.rows() > kEnumerationBudget)
        throw ResourceError("reed_muller: RM(" + std::to_string(r) + "," + std::to_string(m) +
                            ") exceeds the enumeration budget of 24");
    return LinearCode(g, nullspace_basis(g));
}

LinearCode LinearCode::repetition(std::size_t n) {
    if (n < 1) throw ConstructionError("repetition: n must be >= 1");
    if (n - 1 > kEnumerationBudget)
        throw ResourceError("repetition: n - k = " + std::to_string(n - 1) +
                            " exceeds the enumeration budget of 24");
    BitMatrix g(1, n);
    for (std::size_t i = 0; i < n; ++i) g.set(0, i, true);
    return LinearCode(g, nullspace_basis(g));
}

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    if (g.rows() == 0 || g.cols() == 0) throw ConstructionError("from_generator: empty matrix");
    const RrefResult r = rref(g);
    if (r.rank != g.rows()) throw ConstructionError("from_generator: generator matrix is rank-deficient");
    return LinearCode(r.reduced, nullspace_basis(r.reduced));
}

namespace {

unsigned parse_uint(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed " + what + " parameter: '" + text + "'");
    try {
        const unsigned long value = std::stoul(text);
        if (value > std::numeric_limits<unsigned>::max()) throw ParseError("");
        return static_cast<unsigned>(value);
    } catch (...) {
        throw ParseError("malformed " + what + " parameter: '" + text + "'");
    }
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file '" + path + "'");
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k)) throw ParseError("code file '" + path + "' must start with 'n k'");
    std::vector<BitVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::string line;
        if (!(in >> line)) throw ParseError("code file '" + path + "': expected " + std::to_string(k) + " generator rows");
        if (line.size() != n)
            throw ParseError("code file '" + path + "': row " + std::to_string(i) + " has length " +
                             std::to_string(line.size()) + ", expected " + std::to_string(n));
        rows.push_back(BitVector::from_string(line));
    }
    return LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
}

}  // namespace

LinearCode LinearCode::make(const std::string& family_spec) {
    const auto colon = family_spec.find(':');
    const std::string name = family_spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : family_spec.substr(colon + 1);

    if (name == "hamming") return hamming(parse_uint(args, "hamming"));
    if (name == "simplex") return simplex(parse_uint(args, "simplex"));
    if (name == "repetition") return repetition(parse_uint(args, "repetition"));
    if (name == "rm" || name == "reed_muller") {
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw ParseError("rm family expects 'rm:<r>,<m>'");
        return reed_muller(parse_uint(args.substr(0, comma), "rm"), parse_uint(args.substr(comma + 1), "rm"));
    }
    if (name == "file") {
        if (args.empty()) throw ParseError("file family expects 'file:<path>'");
        return load_code_file(args);
    }
    throw ParseError("unknown code family '" + name +
                     "'; valid families: hamming:<r>, rm:<r>,<m>, repetition:<n>, simplex:<r>, file:<path>");
}

}  // namespace compcode
