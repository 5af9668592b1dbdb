#include "liftcodes/decode_he.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liftcodes/rng.hpp"

namespace liftcodes {

std::pair<double, double> sum_zero_prob(std::uint32_t q, double epsilon, unsigned k)
{
    require(q >= 2, Errc::BadParameters, "q must be >= 2");
    require(epsilon >= 0.0 && epsilon <= 1.0, Errc::BadEpsilon, "epsilon must be in [0, 1]");
    require(k >= 1, Errc::BadParameters, "k must be >= 1");
    const double base = std::pow(1.0 - q * epsilon / (q - 1.0), k);
    const double p0 = 1.0 / q + (1.0 - 1.0 / q) * base;
    const double pa = 1.0 / q - base / q;
    return {p0, pa};
}

VoteProbs vote_probs(std::uint32_t q, double epsilon)
{
    require(q >= 2, Errc::BadParameters, "q must be >= 2");
    require(epsilon > 0.0 && epsilon <= (q - 1.0) / q, Errc::BadEpsilon,
            "epsilon must be in (0, (q-1)/q]");
    VoteProbs out;
    out.q = q;
    out.epsilon = epsilon;
    out.gap = std::pow(epsilon * q / (q - 1.0), q - 1.0);
    out.p_hat = 1.0 / q + (q - 1.0) / q * out.gap;
    out.p_check = 1.0 / q - out.gap / q;
    out.p_bar = (out.p_hat + out.p_check) / 2.0;
    return out;
}

std::uint64_t required_lines(std::uint32_t q, double epsilon, double delta, std::uint64_t n_info)
{
    require(delta > 0.0, Errc::BadParameters, "delta must be positive");
    require(n_info >= 1, Errc::BadParameters, "n_info must be >= 1");
    const VoteProbs vp = vote_probs(q, epsilon);
    // 2 (q-1) n_info exp(-gap^2 s / 2) <= delta
    const double s = 2.0 / (vp.gap * vp.gap) * std::log(2.0 * (q - 1.0) * static_cast<double>(n_info) / delta);
    if (s <= 1.0)
        return 1;
    return static_cast<std::uint64_t>(std::ceil(s));
}

namespace {

void check_he_input(const LiftedCode& code, const Word& g, std::uint32_t lines)
{
    require(code.base->kind() == BaseKind::Spc && code.t == 1, Errc::NotSpc,
            "high-error decoding needs an SPC base code with t = 1");
    require(g.q == code.f().q() && g.dim == code.m, Errc::DimensionMismatch, "word shape mismatch");
    require(erasure_count(g) == 0, Errc::TooManyErasures, "HE decoding takes an erasure-free word");
    require(lines >= 1, Errc::BadParameters, "need at least one line");
    require(lines <= code.spread.lambda_idx.size(), Errc::TooManyLines,
            "more lines requested than distinct directions");
}

VoteTally vote_at(const LiftedCode& code, const Word& g, std::uint32_t a_index,
                  std::uint32_t lines, std::uint64_t seed)
{
    const Field& f = code.f();
    const std::uint32_t q = f.q();
    const std::size_t n_dirs = code.spread.lambda_idx.size();

    // Partial Fisher-Yates over all direction indices with the stream of
    // this position.
    rng::Stream st(seed, a_index);
    std::vector<std::uint32_t> dirs(n_dirs);
    for (std::uint32_t i = 0; i < n_dirs; ++i)
        dirs[i] = i;
    for (std::uint32_t i = 0; i < lines; ++i)
        std::swap(dirs[i], dirs[i + st.below(n_dirs - i)]);

    VoteTally tally;
    tally.counts.assign(q, 0);
    for (std::uint32_t i = 0; i < lines; ++i) {
        const auto& lambda = code.spread.lambda_idx[dirs[i]];
        Elem sum = 0;
        for (std::uint32_t li = 1; li < q; ++li)
            sum = f.add(sum, g.values[add_point_indices(f, code.m, a_index, lambda[li])]);
        ++tally.counts[f.neg(sum)];
    }
    std::uint32_t best = tally.counts[0];
    for (std::uint32_t alpha = 1; alpha < q; ++alpha) {
        if (tally.counts[alpha] > best) {
            best = tally.counts[alpha];
            tally.winner = static_cast<Elem>(alpha);
            tally.tie = false;
        } else if (tally.counts[alpha] == best) {
            tally.tie = true;
        }
    }
    return tally;
}

} // namespace

VoteTally he_vote(const LiftedCode& code, const Word& g, std::uint32_t a_index,
                  std::uint32_t lines, std::uint64_t seed)
{
    check_he_input(code, g, lines);
    require(a_index < code.n, Errc::OutOfRange, "point index out of range");
    return vote_at(code, g, a_index, lines, seed);
}

Word decode_he(const LiftedCode& code, const Word& g, std::uint32_t lines, std::uint64_t seed, HeStats* stats)
{
    check_he_input(code, g, lines);
    std::vector<Elem> info_values(code.k, 0);
    std::uint64_t ties = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : ties)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(code.k); ++i) {
        const VoteTally tally = vote_at(code, g, code.info_positions[i], lines, seed);
        info_values[i] = tally.winner;
        ties += tally.tie;
    }

    if (stats != nullptr)
        stats->tie_count = ties;
    return lift_encode_systematic(code, info_values);
}

} // namespace liftcodes
