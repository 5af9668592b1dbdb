#pragma once

#include <optional>

#include "liftcodes/lift.hpp"

namespace liftcodes {

/// Per-point tally of local decoding results over the spread: counts[alpha][j]
/// is the number of subspaces a + V_i whose restriction decodes to a base
/// codeword with value alpha at the origin at exact distance j (distances
/// over the punctured domain when d_F is even), star counts the subspaces
/// with no codeword in radius, and score[alpha] is the aggregated lower bound
/// N_a(alpha) on d(f, g) over codewords f with f(a) = alpha.
struct TallyTable {
    std::uint32_t point = 0;
    std::uint32_t q = 0;
    unsigned e = 0;
    std::vector<std::int32_t> counts; // q x (e+1), row per alpha
    std::int32_t star = 0;
    std::vector<std::int8_t> delta;   // per alpha; zero when d_F is even
    std::vector<std::int64_t> score;  // per alpha

    std::int32_t count(Elem alpha, unsigned j) const { return counts[alpha * (e + 1) + j]; }
};

/// Tally the received word g at point a over all spread subspaces. For even
/// d_F an erasure is placed at the origin of each restriction before the
/// local decode. g must be erasure-free.
TallyTable local_tally(const LiftedCode& code, const Word& g, std::uint32_t a_index);

/// d(f, g) >= N_a(f(a)) for every codeword f; property harness, must always
/// return true.
bool n_lower_bound_check(const LiftedCode& code, const Word& f, const Word& g, std::uint32_t a_index);

enum class BdMode {
    Full,       // decode every point
    Systematic, // decode the information positions, then re-encode
};

enum class BdFailure { None, Tie, NotInCode, RadiusExceeded };

struct BdResult {
    std::optional<Word> word;
    BdFailure failure = BdFailure::None;

    bool ok() const { return word.has_value(); }
};

const char* to_string(BdFailure reason);

/// Bounded-distance decoder: per point, the candidate value is the argmin of
/// the tally scores; whenever some codeword f has d(f, g) <= e_low the output
/// is exactly f. For odd d_F the local decoder runs once per coset of each
/// spread subspace and the outcome is re-based for every point of the coset.
/// The result is post-verified (fast membership plus radius), so a returned
/// word is never a wrong codeword presented as success.
BdResult decode_bd(const LiftedCode& code, const Word& g, BdMode mode = BdMode::Full);

/// Serial reference path: per-point tallies with no coset reuse and no
/// parallelism. Kept for testing; must match decode_bd bit for bit.
BdResult decode_bd_reference(const LiftedCode& code, const Word& g);

} // namespace liftcodes
