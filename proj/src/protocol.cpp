#include "compcode/protocol.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "compcode/channel.hpp"
#include "compcode/errors.hpp"

namespace compcode {

namespace {

// fixed substream assignment inside one trial
enum Purpose : std::uint64_t { kRaw = 0, kChannelAB = 1, kChannelAE = 2, kEvePick = 3, kSifting = 4 };

SplitMix64 purpose_rng(RngStream trial_stream, Purpose p) {
    return SplitMix64({trial_stream.seed, trial_stream.stream_id * 8 + p});
}

double leader_success_probability(const LinearCode& c1, double p) {
    // probability that a BSC(p) error pattern is exactly one of the coset
    // leaders, i.e. is corrected by complete decoding
    const auto hist = c1.leader_weight_histogram();
    const auto n = static_cast<double>(c1.n());
    double total = 0.0;
    for (std::size_t w = 0; w < hist.size(); ++w) {
        if (!hist[w]) continue;
        total += static_cast<double>(hist[w]) * std::pow(p, static_cast<double>(w)) *
                 std::pow(1.0 - p, n - static_cast<double>(w));
    }
    return total;
}

}  // namespace

SiftingOutcome simulate_sifting(std::size_t n, double p_true, double threshold, SplitMix64& rng) {
    if (!(threshold > 0.0 && threshold < 0.5)) throw DomainError("sifting threshold must be in (0, 0.5)");
    SiftingOutcome out;
    out.raw_len = 4 * n;
    out.threshold = threshold;

    // basis agreement: independent fair coin per transmitted state
    std::size_t sifted = 0;
    for (std::size_t i = 0; i < out.raw_len; ++i)
        if (rng.next_u64() & 1u) ++sifted;
    out.sifted_len = sifted;
    if (sifted < 2 * n) {
        out.aborted = true;
        return out;
    }

    // choose n distinct check positions (partial Fisher-Yates over indices)
    std::vector<std::uint32_t> positions(sifted);
    for (std::size_t i = 0; i < sifted; ++i) positions[i] = static_cast<std::uint32_t>(i);
    out.check_bits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(sifted - i));
        std::swap(positions[i], positions[j]);
        out.check_bits.push_back(positions[i]);
    }
    std::sort(out.check_bits.begin(), out.check_bits.end());

    // the check bits see the same BSC as the key bits
    std::size_t errors = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_bernoulli(p_true)) ++errors;
    out.estimated_ber = static_cast<double>(errors) / static_cast<double>(n);
    out.aborted = out.estimated_ber > threshold;
    return out;
}

ReconcileResult reconcile(const CompositeCode& cc, const BitVector& r_a, const BitVector& r_b) {
    if (r_a.size() != cc.n() || r_b.size() != cc.n())
        throw DimensionError("reconcile: string lengths must equal the block length");
    ReconcileResult res;
    res.u_a = cc.c1().decode(r_a).codeword;
    res.announcement = r_a ^ res.u_a;
    const BitVector v_b = res.announcement ^ r_b;  // u_a xor (r_a xor r_b)
    res.u_b = cc.c1().decode(v_b).codeword;
    res.ok = res.u_a == res.u_b;
    return res;
}

KeyBits extract_shared_key(const CompositeCode& cc, const BitVector& u) { return cc.extract_key(u); }

EveResult eve_attack(const CompositeCode& cc, const BitVector& r_e, const BitVector& announcement,
                     AttackMode mode, SplitMix64& rng) {
    if (r_e.size() != cc.n() || announcement.size() != cc.n())
        throw DimensionError("eve_attack: string lengths must equal the block length");
    EveResult res;
    const BitVector v_e = announcement ^ r_e;
    res.u_e = cc.c1().decode(v_e).codeword;
    if (mode == AttackMode::decode) {
        res.guess = cc.extract_key(res.u_e);
        res.candidates = 1;
        return res;
    }

    const std::vector<BitVector> ball = cc.enumerate_ball(res.u_e, cc.c2().t());
    std::vector<std::uint64_t> keys;
    keys.reserve(ball.size());
    for (const auto& c : ball) keys.push_back(cc.key_index_of_word(c.low_word()));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    res.candidates = ball.size();
    res.guess = KeyBits::from_index(cc.key_len(), keys[rng.next_below(keys.size())]);
    return res;
}

TrialResult run_trial(const CompositeCode& cc, const ChannelParams& params, RngStream stream,
                      const ProtocolOptions& options) {
    params.validate();
    TrialResult trial;

    if (options.sifting) {
        SplitMix64 sift_rng = purpose_rng(stream, kSifting);
        trial.sifting = simulate_sifting(cc.n(), params.e_ab, options.sifting_threshold, sift_rng);
        if (trial.sifting->aborted) {
            trial.aborted = true;
            trial.abort_reason = trial.sifting->sifted_len < 2 * cc.n()
                                     ? "sifting produced fewer than 2n bits"
                                     : "estimated check-bit error rate above threshold";
            return trial;
        }
    }

    SplitMix64 raw_rng = purpose_rng(stream, kRaw);
    SplitMix64 ab_rng = purpose_rng(stream, kChannelAB);
    SplitMix64 ae_rng = purpose_rng(stream, kChannelAE);
    SplitMix64 eve_rng = purpose_rng(stream, kEvePick);

    trial.r_a = sample_uniform(cc.n(), raw_rng);
    trial.r_b = trial.r_a ^ sample_error_pattern(cc.n(), params.e_ab, ab_rng);
    trial.r_e = trial.r_a ^ sample_error_pattern(cc.n(), params.e_ae, ae_rng);

    const ReconcileResult rec = reconcile(cc, trial.r_a, trial.r_b);
    trial.u_a = rec.u_a;
    trial.u_b = rec.u_b;
    trial.announcement = rec.announcement;
    trial.reconciliation_ok = rec.ok;
    trial.key_a = extract_shared_key(cc, trial.u_a);
    trial.key_b = extract_shared_key(cc, trial.u_b);

    const EveResult decode_attack = eve_attack(cc, trial.r_e, trial.announcement, AttackMode::decode, eve_rng);
    const EveResult ball_attack = eve_attack(cc, trial.r_e, trial.announcement, AttackMode::ball, eve_rng);
    trial.u_e = decode_attack.u_e;
    trial.eve_guess_decode = decode_attack.guess;
    trial.eve_guess_ball = ball_attack.guess;
    trial.eve_candidates = ball_attack.candidates;
    trial.eve_match_decode = trial.eve_guess_decode == trial.key_a;
    trial.eve_match_ball = trial.eve_guess_ball == trial.key_a;
    return trial;
}

namespace {

struct Tally {
    std::uint64_t aborted = 0;
    std::uint64_t recon_failures = 0;
    std::uint64_t eve_decode = 0;
    std::uint64_t eve_ball = 0;
    std::uint64_t candidates = 0;

    void absorb(const TrialResult& t) {
        if (t.aborted) {
            ++aborted;
            return;
        }
        if (!t.reconciliation_ok) ++recon_failures;
        if (t.eve_match_decode) ++eve_decode;
        if (t.eve_match_ball) ++eve_ball;
        candidates += t.eve_candidates;
    }

    void merge(const Tally& other) {
        aborted += other.aborted;
        recon_failures += other.recon_failures;
        eve_decode += other.eve_decode;
        eve_ball += other.eve_ball;
        candidates += other.candidates;
    }
};

ExperimentReport assemble(const CompositeCode& cc, const ChannelParams& params, std::uint64_t trials,
                          RngStream seed, const ProtocolOptions& options, const Tally& tally) {
    ExperimentReport report;
    report.n = cc.n();
    report.k1 = cc.c1().k();
    report.k2 = cc.c2().k();
    report.key_len = cc.key_len();
    report.params = params;
    report.trials = trials;
    report.aborted = tally.aborted;
    report.reconciliation_failures = tally.recon_failures;
    report.eve_matches_decode = tally.eve_decode;
    report.eve_matches_ball = tally.eve_ball;
    report.eve_candidates_total = tally.candidates;
    report.seed = seed;
    report.sifting_enabled = options.sifting;
    report.theory.key_rate = key_rate(params);
    report.theory.eve_guess_bound =
        params.e_ae >= params.e_ab ? eve_guess_bound(static_cast<unsigned>(cc.n()), params) : 1.0;
    report.theory.recon_fail_predicted = 1.0 - leader_success_probability(cc.c1(), params.e_ab);
    return report;
}

}  // namespace

ExperimentReport run_experiment_serial(const CompositeCode& cc, const ChannelParams& params,
                                       std::uint64_t trials, RngStream seed, const ProtocolOptions& options) {
    if (trials < 1) throw DomainError("run_experiment: trials must be >= 1");
    params.validate();
    Tally tally;
    for (std::uint64_t i = 0; i < trials; ++i)
        tally.absorb(run_trial(cc, params, seed.substream(i), options));
    return assemble(cc, params, trials, seed, options, tally);
}

ExperimentReport run_experiment(const CompositeCode& cc, const ChannelParams& params, std::uint64_t trials,
                                RngStream seed, const ProtocolOptions& options, int threads) {
    if (trials < 1) throw DomainError("run_experiment: trials must be >= 1");
    params.validate();

    int workers = threads;
#ifdef _OPENMP
    if (workers <= 0) workers = omp_get_max_threads();
#else
    if (workers <= 0) workers = 1;
#endif

    std::vector<Tally> partial(workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        partial[tid].absorb(run_trial(cc, params, seed.substream(static_cast<std::uint64_t>(i)), options));
    }

    Tally tally;
    for (const auto& p : partial) tally.merge(p);
    return assemble(cc, params, trials, seed, options, tally);
}

}  // namespace compcode
