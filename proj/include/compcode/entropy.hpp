#pragma once

#include <cstdint>

#include "compcode/errors.hpp"

namespace compcode {

/// Binary symmetric channel pair: Alice-Bob and Alice-Eve crossover
/// probabilities.  Both must lie in [0, 0.5].
struct ChannelParams {
    double e_ab = 0.0;
    double e_ae = 0.0;

    void validate() const;

    bool operator==(const ChannelParams&) const = default;
};

/// Shannon entropy of a Bernoulli(x) bit, H(x) = -x log2 x - (1-x) log2(1-x),
/// with the convention 0 log 0 = 0 so H(0) = H(1) = 0.
double binary_entropy(double x);

struct Lemma1Result {
    std::uint64_t lhs = 0;  // exact integer sum of binomials C(n,i), i <= floor(n*t)
    double rhs = 0.0;       // 2^(n*H(t))
    bool holds = false;     // lhs <= rhs
};

/// Checks sum_{i=0}^{floor(n*t)} C(n,i) <= 2^(n*H(t)).  The left side is
/// summed in exact integer arithmetic; only the right side is floating
/// point.  Supported for n in [1, 64] (the exact sum fits in 64 bits there);
/// larger n raises ResourceError, t outside [0, 0.5] raises DomainError.
Lemma1Result lemma1_check(unsigned n, double t);

struct TypicalityBounds {
    double p_lo = 0.0;    // 2^(-n(H(e)+eps)), least probable typical pattern
    double p_hi = 0.0;    // 2^(-n(H(e)-eps)), most probable typical pattern
    double size_lo = 0.0; // (1-eps) 2^(n(H(e)-eps)), typical-set size lower bound
    double size_hi = 0.0; // 2^(n(H(e)+eps)), typical-set size upper bound
};

/// Probability and cardinality bounds for the typical set of n-bit error
/// patterns at crossover e.  Requires 0 < e < 1 and eps > 0.
TypicalityBounds typicality_bounds(unsigned n, double e, double eps);

/// Extractable secret bits per raw bit: H(e_ae) - H(e_ab).
double key_rate(const ChannelParams& params);

/// 2^(-n * key_rate): the probability that an eavesdropper at crossover
/// e_ae guesses the n-bit block's key.  Requires e_ae >= e_ab.
double eve_guess_bound(unsigned n, const ChannelParams& params);

/// Syndrome bits disclosed during reconciliation: f * n * H(e), where
/// f >= 1 is the error correction efficiency (f = 1 is the Shannon limit).
double reconciliation_leakage(unsigned n, double e, double f);

}  // namespace compcode
