/*
   Copyright 2026 The idtag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1.0
*/

#ifndef IDTAG_PROTOCOL_HPP
#define IDTAG_PROTOCOL_HPP

#include <cmath>

#include "concat.hpp"
#include "rng.hpp"

namespace idtag {

/* Noiseless identification protocol over a ConcatCode and Monte Carlo
   estimation of the second-kind (false identification) error.

   A sender holding identity i draws a position j and announces the pair
   (j, T_i(j)).  The verifier interested in identity i' recomputes T_{i'}(j)
   and accepts on equality.  With a noiseless channel the first-kind error
   is structurally zero; the second-kind error (accepting i' != i) is
   bounded by lambda_2 <= 1 - d_c/n_c.

   Experiment stream discipline (root seed s):
     - substream(s, 0): challenge randomness (the fixed position j in
       fixed-randomness mode).
     - substream(s, 1): seed of the fixed sender identity (first output).
     - substream(s, 2 + t): everything trial t needs.  Fixed-randomness
       mode draws candidate identity seeds from it until the candidate
       differs from the sender.  Average mode draws the sender seed, then
       verifier seeds until distinct, then the position j.
   Every trial is self-contained, so a run can be partitioned across
   workers without changing the outcome. */

struct VerifierDecision {
    bool accepted = false;
    Challenge challenge;
    u64 verifier_identity_digest = 0; // opaque reference to the identity checked against
};

enum class ExperimentMode { FixedRandomness, Average };

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

struct FaExperimentReport {
    u64 q = 0;
    unsigned k = 0;
    unsigned delta = 0;
    ExperimentMode mode = ExperimentMode::FixedRandomness;
    u64 trials = 0;
    u64 false_accepts = 0;
    double ratio = 0.0;
    Rational bound;              // lambda_2 = 1 - d_c/n_c
    double bound_value = 0.0;
    double analytic_agreement = 0.0; // exact per-trial agreement probability
    WilsonInterval wilson;       // 95% score interval around ratio
    u64 seed = 0;
};

// 64-bit FNV-1a over the identity's residues; stable across platforms
inline u64 identity_digest(const Identity& id) {
    u64 h = 0xCBF29CE484222325ull;
    for (u64 r : id.residues) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (r >> (8 * byte)) & 0xFF;
            h *= 0x100000001B3ull;
        }
    }
    return h;
}

// Wilson score interval, clamped to [0, 1]; z defaults to the 95% quantile
inline WilsonInterval wilson_interval(u64 successes, u64 trials, double z = 1.959963984540054) {
    if (trials == 0) throw std::invalid_argument("Wilson interval needs at least one trial");
    const double n = static_cast<double>(trials);
    const double p_hat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p_hat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;
    WilsonInterval w;
    // the endpoints are exact for the degenerate corners; snapping them
    // avoids rounding residue of order 1e-19 from the square root
    w.low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    w.high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return w;
}

// deterministic core of send(): the challenge for a chosen position
inline Challenge challenge_at(const ConcatCode& code, const Identity& identity, u128 j) {
    Challenge ch;
    ch.randomness = j;
    ch.tag = code.tag(identity, j).coefficients[0];
    return ch;
}

// sender step: uniform position from the caller's stream, tag on demand
inline Challenge send(const ConcatCode& code, const Identity& identity, SplitMix64& rng) {
    return challenge_at(code, identity, rng.uniform_below_u128(code.block_length()));
}

// verifier step: accept iff the tag recomputed under the verifier's own
// identity matches the received one
inline VerifierDecision verify(const ConcatCode& code, const Identity& verifier_identity, const Challenge& ch) {
    if (ch.randomness >= code.block_length())
        throw MalformedChallenge("challenge position " + to_string(ch.randomness) + " out of range");
    if (ch.tag >= code.q()) throw MalformedChallenge("challenge tag is not a GF(q) residue");
    VerifierDecision decision;
    decision.challenge = ch;
    decision.verifier_identity_digest = identity_digest(verifier_identity);
    decision.accepted = code.tag(verifier_identity, ch.randomness).coefficients[0] == ch.tag;
    return decision;
}

/* Exact per-trial agreement probability for a uniformly drawn wrong
   identity at any fixed position j:  the identity -> tag map is a
   surjective linear functional GF(q)^(k_c) -> GF(q), so each tag value has
   exactly N/q preimages among the N = q^(k_c) identities and

       P[T_{i'}(j) = T_i(j),  i' != i uniform]  =  (N/q - 1) / (N - 1),

   independent of i and j.  When N overflows 128 bits the value is 1/q to
   well below double precision. */
inline double analytic_fixed_j_agreement(const ConcatCode& code) {
    const IdentityCount count = code.identity_count();
    u128 n_ids = 1;
    bool exact = true;
    for (u128 i = 0; i < count.exponent; ++i) {
        if (n_ids > (~static_cast<u128>(0)) / count.base) {
            exact = false;
            break;
        }
        n_ids *= count.base;
    }
    if (!exact) return 1.0 / static_cast<double>(code.q());
    const long double num = static_cast<long double>(n_ids / code.q()) - 1.0L;
    const long double den = static_cast<long double>(n_ids) - 1.0L;
    return static_cast<double>(num / den);
}

namespace detail {

inline FaExperimentReport make_report(const ConcatCode& code, ExperimentMode mode, u64 trials, u64 false_accepts,
                                      u64 seed) {
    FaExperimentReport report;
    report.q = code.q();
    report.k = code.k();
    report.delta = code.delta();
    report.mode = mode;
    report.trials = trials;
    report.false_accepts = false_accepts;
    report.ratio = static_cast<double>(false_accepts) / static_cast<double>(trials);
    report.bound = code.false_id_bound();
    report.bound_value = report.bound.value();
    report.analytic_agreement = analytic_fixed_j_agreement(code);
    report.wilson = wilson_interval(false_accepts, trials);
    report.seed = seed;
    return report;
}

} // namespace detail

// draw one sender identity and one position, then challenge `trials`
// uniformly drawn *distinct* identities with that same fixed pair
inline FaExperimentReport run_fixed_randomness_experiment(const ConcatCode& code, u64 trials, u64 seed) {
    if (trials == 0) throw std::invalid_argument("experiment needs at least one trial");
    SplitMix64 position_stream = substream(seed, 0);
    const u128 j = position_stream.uniform_below_u128(code.block_length());
    const Identity sender = code.identity_from_seed(substream(seed, 1).next());
    const u64 expected_tag = code.tag(sender, j).coefficients[0];
    u64 false_accepts = 0;
    for (u64 t = 0; t < trials; ++t) {
        SplitMix64 trial_stream = substream(seed, 2 + t);
        Identity candidate = code.identity_from_seed(trial_stream.next());
        while (candidate == sender) candidate = code.identity_from_seed(trial_stream.next());
        if (code.tag(candidate, j).coefficients[0] == expected_tag) ++false_accepts;
    }
    return detail::make_report(code, ExperimentMode::FixedRandomness, trials, false_accepts, seed);
}

// independent sender identity, verifier identity (distinct) and position in
// every trial: estimates the average false-identification probability
inline FaExperimentReport run_average_fa_experiment(const ConcatCode& code, u64 trials, u64 seed) {
    if (trials == 0) throw std::invalid_argument("experiment needs at least one trial");
    u64 false_accepts = 0;
    for (u64 t = 0; t < trials; ++t) {
        SplitMix64 trial_stream = substream(seed, 2 + t);
        const Identity sender = code.identity_from_seed(trial_stream.next());
        Identity verifier_id = code.identity_from_seed(trial_stream.next());
        while (verifier_id == sender) verifier_id = code.identity_from_seed(trial_stream.next());
        const u128 j = trial_stream.uniform_below_u128(code.block_length());
        const Challenge ch = challenge_at(code, sender, j);
        if (verify(code, verifier_id, ch).accepted) ++false_accepts;
    }
    return detail::make_report(code, ExperimentMode::Average, trials, false_accepts, seed);
}

} // namespace idtag

#endif
