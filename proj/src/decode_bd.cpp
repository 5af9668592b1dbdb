#include "liftcodes/decode_bd.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liftcodes {

namespace {

void check_input(const LiftedCode& code, const Word& g)
{
    require(g.q == code.f().q() && g.dim == code.m, Errc::DimensionMismatch, "word shape mismatch");
    require(erasure_count(g) == 0, Errc::TooManyErasures, "BD decoding takes an erasure-free word");
}

// Contribution of one local outcome to N_a(alpha), Definition 2 weights.
// g_at = g(a); odd selects the delta convention.
inline std::int64_t outcome_term(bool star, Elem beta, unsigned j, Elem alpha, Elem g_at,
                                 unsigned d_f, unsigned e, bool odd)
{
    if (star)
        return static_cast<std::int64_t>(e) + 1 - (odd && g_at != alpha);
    if (beta == alpha)
        return static_cast<std::int64_t>(j) - (odd && g_at != alpha);
    return static_cast<std::int64_t>(d_f) - 1 - j + (odd && g_at != beta);
}

struct ArgminResult {
    Elem best = 0;
    bool tie = false;
};

ArgminResult argmin(const std::vector<std::int64_t>& score)
{
    ArgminResult out;
    std::int64_t best = score[0];
    for (std::uint32_t alpha = 1; alpha < score.size(); ++alpha) {
        if (score[alpha] < best) {
            best = score[alpha];
            out.best = static_cast<Elem>(alpha);
            out.tie = false;
        } else if (score[alpha] == best) {
            out.tie = true;
        }
    }
    return out;
}

BdResult postverify(const LiftedCode& code, const Word& g, Word candidate, bool any_tie)
{
    if (any_tie)
        return {std::nullopt, BdFailure::Tie};
    if (!lift_contains(code, candidate, MembershipMode::Fast))
        return {std::nullopt, BdFailure::NotInCode};
    if (distance(candidate, g) > code.e_low)
        return {std::nullopt, BdFailure::RadiusExceeded};
    return {std::move(candidate), BdFailure::None};
}

// Decode positions one by one via local_tally; used by the even-d_F path and
// the serial reference.
void tally_scores_at(const LiftedCode& code, const Word& g, std::uint32_t a_index,
                     std::vector<std::int64_t>& score)
{
    const TallyTable tt = local_tally(code, g, a_index);
    score = tt.score;
}

// Odd-d_F fast path: run the base decoder once per coset of each spread
// subspace; the decoded codeword re-bases to every point of the coset via
// the translation identity, at the same distance j. Accumulates the
// Definition 2 sums (everything except the leading indicator) into
// score_acc, a row of q values per decoded point.
void accumulate_odd(const LiftedCode& code, const Word& g, const std::vector<std::int32_t>& slot_of_point,
                    std::vector<std::int64_t>& score_acc)
{
    const Field& f = code.f();
    const std::uint32_t q = f.q();
    const std::uint32_t n = static_cast<std::uint32_t>(code.n);
    const unsigned d_f = code.base->min_distance();
    const unsigned e = code.base->radius();
    const std::uint64_t block = code.spread.lambda_idx.empty() ? 0 : code.spread.lambda_idx[0].size();
    const std::size_t s_count = code.spread.lambda_idx.size();

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::int64_t> local_acc(score_acc.size(), 0);
        Word restriction;
        restriction.q = q;
        restriction.dim = code.t;
        restriction.values.resize(block);
        std::vector<char> seen(n);

#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (std::int64_t si = 0; si < static_cast<std::int64_t>(s_count); ++si) {
            const auto& lambda = code.spread.lambda_idx[si];
            std::fill(seen.begin(), seen.end(), 0);
            for (std::uint32_t rep = 0; rep < n; ++rep) {
                if (seen[rep])
                    continue;
                bool wanted = false;
                for (std::uint64_t li = 0; li < block; ++li) {
                    const std::uint32_t pt = add_point_indices(f, code.m, rep, lambda[li]);
                    seen[pt] = 1;
                    wanted = wanted || slot_of_point[pt] >= 0;
                    restriction.values[li] = g.values[pt];
                }
                if (!wanted)
                    continue;
                const LocalOutcome outcome = code.base->decode_bmd(restriction);
                for (std::uint64_t li = 0; li < block; ++li) {
                    const std::uint32_t pt = add_point_indices(f, code.m, rep, lambda[li]);
                    const std::int32_t slot = slot_of_point[pt];
                    if (slot < 0)
                        continue;
                    const Elem g_at = g.values[pt];
                    const Elem beta = outcome.decoded ? outcome.codeword.values[li] : Elem{0};
                    std::int64_t* row = local_acc.data() + static_cast<std::size_t>(slot) * q;
                    for (std::uint32_t alpha = 0; alpha < q; ++alpha)
                        row[alpha] += outcome_term(!outcome.decoded, beta, outcome.j,
                                                   static_cast<Elem>(alpha), g_at, d_f, e, true);
                }
            }
        }

#ifdef _OPENMP
#pragma omp critical(liftcodes_bd_merge)
#endif
        {
            for (std::size_t i = 0; i < score_acc.size(); ++i)
                score_acc[i] += local_acc[i];
        }
    }
}

BdResult decode_positions(const LiftedCode& code, const Word& g, BdMode mode, bool use_fast_paths)
{
    const Field& f = code.f();
    const std::uint32_t q = f.q();
    const bool odd = code.base->min_distance() % 2 == 1;

    std::vector<std::uint32_t> positions;
    if (mode == BdMode::Full) {
        positions.resize(code.n);
        for (std::uint32_t i = 0; i < code.n; ++i)
            positions[i] = i;
    } else {
        positions = code.info_positions;
    }

    std::vector<Elem> decoded(positions.size(), 0);
    std::vector<char> ties(positions.size(), 0);

    if (use_fast_paths && odd) {
        std::vector<std::int32_t> slot_of_point(code.n, -1);
        for (std::size_t i = 0; i < positions.size(); ++i)
            slot_of_point[positions[i]] = static_cast<std::int32_t>(i);
        std::vector<std::int64_t> score_acc(positions.size() * q, 0);
        accumulate_odd(code, g, slot_of_point, score_acc);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(positions.size()); ++i) {
            std::vector<std::int64_t> score(q);
            const Elem g_at = g.values[positions[i]];
            for (std::uint32_t alpha = 0; alpha < q; ++alpha)
                score[alpha] = score_acc[static_cast<std::size_t>(i) * q + alpha] + (g_at != alpha);
            const ArgminResult r = argmin(score);
            decoded[i] = r.best;
            ties[i] = r.tie;
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (use_fast_paths)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(positions.size()); ++i) {
            std::vector<std::int64_t> score;
            tally_scores_at(code, g, positions[i], score);
            const ArgminResult r = argmin(score);
            decoded[i] = r.best;
            ties[i] = r.tie;
        }
    }

    const bool any_tie = std::any_of(ties.begin(), ties.end(), [](char c) { return c != 0; });
    Word candidate;
    if (mode == BdMode::Full) {
        candidate = make_word(f, code.m);
        candidate.values = decoded;
    } else {
        candidate = lift_encode_systematic(code, decoded);
    }
    return postverify(code, g, std::move(candidate), any_tie);
}

} // namespace

TallyTable local_tally(const LiftedCode& code, const Word& g, std::uint32_t a_index)
{
    check_input(code, g);
    require(a_index < code.n, Errc::OutOfRange, "point index out of range");

    const Field& f = code.f();
    const std::uint32_t q = f.q();
    const unsigned d_f = code.base->min_distance();
    const bool odd = d_f % 2 == 1;
    const unsigned e = code.base->radius();

    TallyTable tt;
    tt.point = a_index;
    tt.q = q;
    tt.e = e;
    tt.counts.assign(static_cast<std::size_t>(q) * (e + 1), 0);
    tt.delta.assign(q, 0);
    tt.score.assign(q, 0);

    const Elem g_at = g.values[a_index];
    if (odd)
        for (std::uint32_t alpha = 0; alpha < q; ++alpha)
            tt.delta[alpha] = g_at != alpha;

    Word restriction;
    restriction.q = q;
    restriction.dim = code.t;
    const std::uint64_t block = pow_u64(q, code.t);
    restriction.values.resize(block);

    for (const auto& lambda : code.spread.lambda_idx) {
        for (std::uint64_t li = 0; li < block; ++li)
            restriction.values[li] = g.values[add_point_indices(f, code.m, a_index, lambda[li])];
        if (!odd)
            restriction.values[0] = kErased; // even case: erase the origin
        const LocalOutcome outcome = code.base->decode_bmd(restriction);
        if (outcome.decoded) {
            require(outcome.j <= e, Errc::BadParameters, "local decoder exceeded its radius");
            ++tt.counts[outcome.alpha * (e + 1) + outcome.j];
        } else {
            ++tt.star;
        }
    }

    for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        std::int64_t acc = (g_at != alpha) ? 1 : 0;
        for (std::uint32_t beta = 0; beta < q; ++beta)
            for (unsigned j = 0; j <= e; ++j) {
                const std::int32_t c = tt.counts[beta * (e + 1) + j];
                if (c == 0)
                    continue;
                acc += c * outcome_term(false, static_cast<Elem>(beta), j, static_cast<Elem>(alpha),
                                        g_at, d_f, e, odd);
            }
        if (tt.star != 0)
            acc += tt.star * outcome_term(true, 0, 0, static_cast<Elem>(alpha), g_at, d_f, e, odd);
        tt.score[alpha] = acc;
    }
    return tt;
}

bool n_lower_bound_check(const LiftedCode& code, const Word& f, const Word& g, std::uint32_t a_index)
{
    const TallyTable tt = local_tally(code, g, a_index);
    return static_cast<std::int64_t>(distance(f, g)) >= tt.score[f.values[a_index]];
}

const char* to_string(BdFailure reason)
{
    switch (reason) {
    case BdFailure::None: return "none";
    case BdFailure::Tie: return "tie";
    case BdFailure::NotInCode: return "not-in-code";
    case BdFailure::RadiusExceeded: return "radius-exceeded";
    }
    return "unknown";
}

BdResult decode_bd(const LiftedCode& code, const Word& g, BdMode mode)
{
    check_input(code, g);
    return decode_positions(code, g, mode, /*use_fast_paths=*/true);
}

BdResult decode_bd_reference(const LiftedCode& code, const Word& g)
{
    check_input(code, g);
    return decode_positions(code, g, BdMode::Full, /*use_fast_paths=*/false);
}

} // namespace liftcodes
