#include "compcode/channel.hpp"

#include "compcode/errors.hpp"

namespace compcode {

BitVector sample_error_pattern(std::size_t n, double p, SplitMix64& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_error_pattern: p must be in [0, 1]");
    BitVector v(n);
    if (p == 0.0) return v;
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_bernoulli(p)) v.set(i, true);
    return v;
}

BitVector sample_uniform(std::size_t n, SplitMix64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; i += 64) {
        const std::uint64_t word = rng.next_u64();
        const std::size_t chunk = std::min<std::size_t>(64, n - i);
        for (std::size_t b = 0; b < chunk; ++b)
            if ((word >> b) & 1u) v.set(i + b, true);
    }
    return v;
}

double empirical_ber(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size()) throw DimensionError("empirical_ber: lengths differ");
    if (x.empty()) throw DimensionError("empirical_ber: empty vectors");
    return static_cast<double>(hamming_distance(x, y)) / static_cast<double>(x.size());
}

}  // namespace compcode
