#pragma once

#include <cstdint>

namespace compcode {

/// Identifies one reproducible random stream.  Identical (seed, stream_id)
/// pairs yield identical bit sequences on every platform and worker count.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    bool operator==(const RngStream&) const = default;

    /// Child stream: used to hand each Monte Carlo trial (and each purpose
    /// inside a trial) its own independent stream.
    RngStream substream(std::uint64_t offset) const { return {seed, stream_id + offset}; }
};

/// SplitMix64, the splittable generator of Steele, Lea & Flood (OOPSLA 2014),
/// as used for stream seeding in Java's SplittableRandom.  The algorithm is
/// pinned here because reproducibility across runs, platforms and worker
/// counts is part of the library contract:
///
///   state_0   = mix64(seed + GOLDEN * stream_id)
///   next()    : state += GOLDEN; return mix64(state)
///   mix64(z)  : z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///               z ^= z >> 27; z *= 0x94D049BB133111EB;
///               z ^= z >> 31; return z
///   GOLDEN    = 0x9E3779B97F4A7C15
///
/// Everything is 64-bit wrapping integer arithmetic, so sequences are
/// bit-exact everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(RngStream s) : state_(mix64(s.seed + GOLDEN * s.stream_id)) {}

    std::uint64_t next_u64() {
        state_ += GOLDEN;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, bound); bound must be positive.  Rejection
    /// sampling keeps the distribution exact and the draw sequence
    /// deterministic.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % bound;
    }

private:
    static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace compcode
