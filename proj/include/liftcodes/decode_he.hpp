#pragma once

#include <utility>

#include "liftcodes/lift.hpp"

namespace liftcodes {

/// Closed-form vote probabilities for the high-error decoder over the q-ary
/// symmetric channel with error probability (q-1)/q - epsilon: p_hat is the
/// probability that a parity line votes for the correct symbol, p_check the
/// probability it votes for a fixed wrong one.
struct VoteProbs {
    std::uint32_t q = 0;
    double epsilon = 0;
    double p_hat = 0;
    double p_check = 0;
    double p_bar = 0; // (p_hat + p_check) / 2
    double gap = 0;   // p_hat - p_check = (eps q / (q-1))^(q-1)
};

/// Distribution of a sum of k i.i.d. q-ary noise symbols, each zero with
/// probability 1 - epsilon and uniform over the q-1 other values otherwise:
/// returns (P[sum = 0], P[sum = alpha]) for any fixed alpha != 0.
std::pair<double, double> sum_zero_prob(std::uint32_t q, double epsilon, unsigned k);

VoteProbs vote_probs(std::uint32_t q, double epsilon);

/// Smallest s with 2(q-1) n_info exp(-gap^2 s / 2) <= delta (at least 1);
/// the caller must clamp to the available line count.
std::uint64_t required_lines(std::uint32_t q, double epsilon, double delta, std::uint64_t n_info);

/// Vote counters at one point: counts[alpha] is the number of sampled lines
/// whose negated off-point sum equals alpha.
struct VoteTally {
    std::vector<std::uint32_t> counts;
    Elem winner = 0;
    bool tie = false;
};

/// Plurality vote at point a over `lines` distinct line directions sampled
/// without replacement from a per-position counter-based stream, so results
/// are deterministic given the seed and independent of evaluation order.
VoteTally he_vote(const LiftedCode& code, const Word& g, std::uint32_t a_index,
                  std::uint32_t lines, std::uint64_t seed);

struct HeStats {
    std::uint64_t tie_count = 0;
};

/// High-error randomized decoder for lifted SPC codes: majority vote per
/// information position, then systematic re-encoding.
Word decode_he(const LiftedCode& code, const Word& g, std::uint32_t lines, std::uint64_t seed,
               HeStats* stats = nullptr);

} // namespace liftcodes
