#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compcode/composite_code.hpp"
#include "compcode/entropy.hpp"
#include "compcode/rng.hpp"

namespace compcode {

enum class AttackMode { decode, ball };

struct ProtocolOptions {
    bool sifting = false;         // run the transmission/sifting prologue
    double sifting_threshold = 0.11;  // abort when the check-bit BER exceeds this

    bool operator==(const ProtocolOptions&) const = default;
};

/// Bookkeeping for the transmission prologue: 4n states sent, roughly 2n
/// survive basis sifting, n of those are sacrificed as check bits.
struct SiftingOutcome {
    std::size_t raw_len = 0;
    std::size_t sifted_len = 0;
    std::vector<std::uint32_t> check_bits;  // positions inside the sifted string
    double estimated_ber = 0.0;
    double threshold = 0.0;
    bool aborted = false;
};

struct ReconcileResult {
    BitVector u_a, u_b;
    BitVector announcement;  // r_a xor u_a, the public message
    bool ok = false;         // u_a == u_b
};

struct EveResult {
    BitVector u_e;
    KeyBits guess;
    std::size_t candidates = 0;
};

/// One protocol run.
struct TrialResult {
    BitVector r_a, r_b, r_e;
    BitVector announcement;
    BitVector u_a, u_b, u_e;
    KeyBits key_a, key_b;
    KeyBits eve_guess_decode, eve_guess_ball;
    std::size_t eve_candidates = 0;  // ball size seen by Eve
    bool reconciliation_ok = false;
    bool eve_match_decode = false;
    bool eve_match_ball = false;
    bool aborted = false;
    std::string abort_reason;
    std::optional<SiftingOutcome> sifting;
};

struct TheoryReport {
    double key_rate = 0.0;
    double eve_guess_bound = 0.0;
    /// Closed-form reconciliation failure probability: 1 minus the chance
    /// that the Alice-Bob error pattern is one of C1's coset leaders.
    double recon_fail_predicted = 0.0;

    bool operator==(const TheoryReport&) const = default;
};

/// Aggregate Monte Carlo statistics for one (code pair, channel) point.
/// Counts are integers accumulated per trial, so the report is a pure
/// function of (code pair, params, trials, seed), independent of worker
/// count and execution order.
struct ExperimentReport {
    std::size_t n = 0, k1 = 0, k2 = 0, key_len = 0;
    ChannelParams params;
    std::uint64_t trials = 0;
    std::uint64_t aborted = 0;
    std::uint64_t reconciliation_failures = 0;
    std::uint64_t eve_matches_decode = 0;
    std::uint64_t eve_matches_ball = 0;
    std::uint64_t eve_candidates_total = 0;
    RngStream seed;
    TheoryReport theory;
    bool sifting_enabled = false;

    std::uint64_t completed() const { return trials - aborted; }
    double recon_fail_rate() const { return ratio(reconciliation_failures); }
    double eve_match_rate_decode() const { return ratio(eve_matches_decode); }
    double eve_match_rate_ball() const { return ratio(eve_matches_ball); }
    double mean_candidates() const {
        return completed() ? static_cast<double>(eve_candidates_total) / static_cast<double>(completed()) : 0.0;
    }

    bool operator==(const ExperimentReport&) const = default;

private:
    double ratio(std::uint64_t count) const {
        return completed() ? static_cast<double>(count) / static_cast<double>(completed()) : 0.0;
    }
};

/// Transmission prologue: basis agreement is a fair coin per state, so
/// sifted_len ~ Binomial(4n, 1/2); n random sifted positions become check
/// bits whose empirical error rate gates the run.  Aborts when the estimate
/// exceeds the threshold or fewer than 2n states survive sifting.
SiftingOutcome simulate_sifting(std::size_t n, double p_true, double threshold, SplitMix64& rng);

/// Error reconciliation: Alice decodes r_a to the nearest C1 codeword u_a
/// and announces r_a xor u_a; Bob adds his string to the announcement and
/// decodes u_a xor (r_a xor r_b) with C1.
ReconcileResult reconcile(const CompositeCode& cc, const BitVector& r_a, const BitVector& r_b);

/// Key distillation for a reconciled codeword (delegates to the composite
/// code's coset-index extraction).
KeyBits extract_shared_key(const CompositeCode& cc, const BitVector& u);

/// The eavesdropper's move: recover v_e = announcement xor r_e, decode it
/// with C1, then either take that codeword's key ("decode" mode) or guess
/// uniformly among the keys of all C1 codewords within distance c2.t of it
/// ("ball" mode).
EveResult eve_attack(const CompositeCode& cc, const BitVector& r_e, const BitVector& announcement,
                     AttackMode mode, SplitMix64& rng);

/// One full protocol run on stream (seed, stream_id); the trial consumes
/// substreams stream_id*8+0..4 for the raw string, the two channels, Eve's
/// ball pick and sifting, in that fixed assignment.
TrialResult run_trial(const CompositeCode& cc, const ChannelParams& params, RngStream stream,
                      const ProtocolOptions& options = {});

/// Monte Carlo aggregation; trial i runs on stream seed.substream(i), so the
/// report does not depend on how trials are distributed over workers.
/// threads = 0 means the OpenMP default.
ExperimentReport run_experiment(const CompositeCode& cc, const ChannelParams& params, std::uint64_t trials,
                                RngStream seed, const ProtocolOptions& options = {}, int threads = 0);

/// Reference implementation: plain sequential loop, same report.
ExperimentReport run_experiment_serial(const CompositeCode& cc, const ChannelParams& params,
                                       std::uint64_t trials, RngStream seed,
                                       const ProtocolOptions& options = {});

}  // namespace compcode
