#include "liftcodes/channel.hpp"

#include "liftcodes/rng.hpp"

namespace liftcodes {

ChannelParams make_qsc(const Field& f, double p_err, std::uint64_t seed)
{
    require(p_err >= 0.0 && p_err <= (f.q() - 1.0) / f.q(), Errc::BadParameters,
            "symbol error probability must be in [0, (q-1)/q]");
    return {f.q(), p_err, seed};
}

Word qsc_apply(const Field& f, const ChannelParams& params, const Word& word)
{
    require(params.q == f.q() && word.q == f.q(), Errc::DimensionMismatch, "field mismatch");
    require(erasure_count(word) == 0, Errc::TooManyErasures, "channel input must be erasure-free");
    Word out = word;
    for (std::size_t i = 0; i < word.values.size(); ++i) {
        rng::Stream st(params.seed, i);
        if (st.unit() >= params.p_err)
            continue;
        const Elem shift = static_cast<Elem>(1 + st.below(f.q() - 1));
        out.values[i] = f.add(word.values[i], shift);
    }
    return out;
}

std::vector<Elem> fixed_weight_pattern(const Field& f, std::size_t n, std::size_t w, std::uint64_t seed)
{
    require(w <= n, Errc::BadWeight, "weight exceeds length");
    std::vector<Elem> pattern(n, 0);
    rng::Stream st(seed, 0x9AD5EEDULL);
    std::vector<std::uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < w; ++i) {
        std::swap(idx[i], idx[i + st.below(n - i)]);
        pattern[idx[i]] = static_cast<Elem>(1 + st.below(f.q() - 1));
    }
    return pattern;
}

Word add_pattern(const Field& f, const Word& word, const std::vector<Elem>& pattern)
{
    require(pattern.size() == word.values.size(), Errc::LengthMismatch, "pattern length mismatch");
    Word out = word;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern[i] != 0)
            out.values[i] = f.add(word.values[i], pattern[i]);
    return out;
}

} // namespace liftcodes
