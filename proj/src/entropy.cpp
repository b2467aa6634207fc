#include "compcode/entropy.hpp"

#include <cmath>

namespace compcode {

void ChannelParams::validate() const {
    if (!(e_ab >= 0.0 && e_ab <= 0.5)) throw DomainError("e_ab must be in [0, 0.5]");
    if (!(e_ae >= 0.0 && e_ae <= 0.5)) throw DomainError("e_ae must be in [0, 0.5]");
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary_entropy: argument must be in [0, 1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

namespace {

// long-double twin used where comparisons happen near equality
long double binary_entropy_l(long double x) {
    long double h = 0.0L;
    if (x > 0.0L) h -= x * std::log2l(x);
    if (x < 1.0L) h -= (1.0L - x) * std::log2l(1.0L - x);
    return h;
}

}  // namespace

Lemma1Result lemma1_check(unsigned n, double t) {
    if (n < 1) throw DomainError("lemma1_check: n must be positive");
    if (n > 64) throw ResourceError("lemma1_check: exact summation supported for n <= 64");
    if (!(t >= 0.0 && t <= 0.5)) throw DomainError("lemma1_check: t must be in [0, 0.5]");

    const auto cutoff = static_cast<unsigned>(std::floor(static_cast<double>(n) * t));

    // running binomial C(n,i) via C(n,i) = C(n,i-1) * (n-i+1) / i; the
    // 128-bit intermediate keeps the product exact before the exact division
    std::uint64_t sum = 1;
    std::uint64_t binom = 1;
    for (unsigned i = 1; i <= cutoff; ++i) {
        const unsigned __int128 num = static_cast<unsigned __int128>(binom) * (n - i + 1);
        binom = static_cast<std::uint64_t>(num / i);
        sum += binom;
    }

    const long double exponent = static_cast<long double>(n) * binary_entropy_l(t);
    const long double rhs = std::exp2l(exponent);

    Lemma1Result res;
    res.lhs = sum;
    res.rhs = static_cast<double>(rhs);
    res.holds = static_cast<long double>(sum) <= rhs;
    return res;
}

TypicalityBounds typicality_bounds(unsigned n, double e, double eps) {
    if (!(e > 0.0 && e < 1.0)) throw DomainError("typicality_bounds: e must be in (0, 1)");
    if (!(eps > 0.0)) throw DomainError("typicality_bounds: eps must be positive");
    const double h = binary_entropy(e);
    const double nd = static_cast<double>(n);
    TypicalityBounds b;
    b.p_lo = std::exp2(-nd * (h + eps));
    b.p_hi = std::exp2(-nd * (h - eps));
    b.size_lo = (1.0 - eps) * std::exp2(nd * (h - eps));
    b.size_hi = std::exp2(nd * (h + eps));
    return b;
}

double key_rate(const ChannelParams& params) {
    params.validate();
    return binary_entropy(params.e_ae) - binary_entropy(params.e_ab);
}

double eve_guess_bound(unsigned n, const ChannelParams& params) {
    params.validate();
    if (params.e_ae < params.e_ab)
        throw DomainError("eve_guess_bound: requires e_ae >= e_ab");
    return std::exp2(-static_cast<double>(n) * key_rate(params));
}

double reconciliation_leakage(unsigned n, double e, double f) {
    if (!(e >= 0.0 && e <= 0.5)) throw DomainError("reconciliation_leakage: e must be in [0, 0.5]");
    if (!(f >= 1.0)) throw DomainError("reconciliation_leakage: efficiency f must be >= 1");
    return f * static_cast<double>(n) * binary_entropy(e);
}

}  // namespace compcode
