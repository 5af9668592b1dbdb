#pragma once

#include "liftcodes/word.hpp"

namespace liftcodes {

/// q-ary symmetric channel: each symbol is replaced, independently with
/// probability p_err, by a uniformly random one of the other q-1 symbols.
/// epsilon = (q-1)/q - p_err is the margin used by the high-error decoder.
struct ChannelParams {
    std::uint32_t q = 0;
    double p_err = 0;
    std::uint64_t seed = 0;

    double epsilon() const { return (q - 1.0) / q - p_err; }
};

ChannelParams make_qsc(const Field& f, double p_err, std::uint64_t seed);

/// Corruption of position i depends only on (seed, i), so outputs are
/// reproducible across iteration orders and thread counts.
Word qsc_apply(const Field& f, const ChannelParams& params, const Word& word);

/// Error pattern with uniformly random support of size exactly w and values
/// uniform over the nonzero field elements; deterministic given the seed.
std::vector<Elem> fixed_weight_pattern(const Field& f, std::size_t n, std::size_t w, std::uint64_t seed);

/// word + pattern, symbolwise.
Word add_pattern(const Field& f, const Word& word, const std::vector<Elem>& pattern);

} // namespace liftcodes
