#pragma once

#include "compcode/bitvec.hpp"
#include "compcode/rng.hpp"

namespace compcode {

/// n-bit pattern with each bit independently 1 with probability p.
BitVector sample_error_pattern(std::size_t n, double p, SplitMix64& rng);

/// Uniformly random n-bit vector (64 bits per generator draw).
BitVector sample_uniform(std::size_t n, SplitMix64& rng);

/// Observed bit error rate d(x, y) / n.
double empirical_ber(const BitVector& x, const BitVector& y);

}  // namespace compcode
