// Test-side oracles, independent of the library implementation paths they
// check. Naive by design.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liftcodes/base.hpp"
#include "liftcodes/lift.hpp"
#include "liftcodes/rng.hpp"

namespace oracles {

using liftcodes::Elem;
using liftcodes::Field;
using liftcodes::Word;

// Carry-free multiplication: schoolbook product of the digit polynomials
// followed by reduction modulo the field modulus, all in integer arithmetic
// mod p. Checks the exp/log table path.
inline Elem slow_mul(const Field& f, Elem a, Elem b)
{
    const unsigned p = f.p();
    const unsigned l = f.l();
    std::vector<unsigned> da(l, 0), db(l, 0), prod(2 * l, 0);
    for (unsigned i = 0; i < l; ++i) {
        da[i] = a % p;
        a = static_cast<Elem>(a / p);
        db[i] = b % p;
        b = static_cast<Elem>(b / p);
    }
    for (unsigned i = 0; i < l; ++i)
        for (unsigned j = 0; j < l; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& mod = f.modulus();
    for (unsigned d = 2 * l - 1; d >= l; --d) {
        const unsigned c = prod[d];
        if (c == 0)
            continue;
        for (unsigned i = 0; i <= l; ++i) {
            const unsigned s = (c * mod[i]) % p;
            prod[d - l + i] = (prod[d - l + i] + p - s) % p;
        }
    }
    unsigned value = 0;
    for (unsigned i = l; i-- > 0;)
        value = value * p + prod[i];
    return static_cast<Elem>(value);
}

// All codewords of a base code, by enumerating every message.
inline std::vector<Word> all_codewords(const liftcodes::BaseCode& code)
{
    const std::uint64_t count = liftcodes::pow_u64(code.field().q(), code.dimension());
    std::vector<Word> out;
    out.reserve(count);
    std::vector<Elem> message(code.dimension());
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t rest = v;
        for (auto& c : message) {
            c = static_cast<Elem>(rest % code.field().q());
            rest /= code.field().q();
        }
        out.push_back(code.encode(message));
    }
    return out;
}

// Distance over the non-erased positions of `received`.
inline unsigned punctured_distance(const Word& received, const Word& codeword)
{
    unsigned d = 0;
    for (std::size_t i = 0; i < received.values.size(); ++i)
        if (received.values[i] != liftcodes::kErased && received.values[i] != codeword.values[i])
            ++d;
    return d;
}

// Exhaustive bounded-distance decode: the codeword within `radius` of the
// received word over the non-erased positions, or nullopt. Assumes radius
// below half the (punctured) distance, so the result is unique.
inline std::optional<std::pair<Word, unsigned>> exhaustive_bmd(const std::vector<Word>& codewords,
                                                               const Word& received, unsigned radius)
{
    for (const Word& cw : codewords) {
        const unsigned d = punctured_distance(received, cw);
        if (d <= radius)
            return std::make_pair(cw, d);
    }
    return std::nullopt;
}

// Direct shadow enumeration for the SPC goodness criterion: scans every
// tuple c in Z_q^m, tests digitwise dominance with its own digit loop.
inline bool spc_good_tuple_naive(std::uint32_t q, unsigned p, const std::vector<Elem>& d)
{
    const unsigned m = static_cast<unsigned>(d.size());
    const std::uint64_t count = liftcodes::pow_u64(q, m);
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t rest = v;
        std::uint64_t deg = 0;
        bool dominated = true;
        for (unsigned i = 0; i < m && dominated; ++i) {
            unsigned ci = static_cast<unsigned>(rest % q);
            rest /= q;
            deg += ci;
            unsigned di = d[m - 1 - i]; // digit i of v is coordinate m-1-i, as in point_of_index
            while (ci != 0 || di != 0) {
                if (ci % p > di % p) {
                    dominated = false;
                    break;
                }
                ci /= p;
                di /= p;
            }
        }
        if (dominated && deg != 0 && deg % (q - 1) == 0)
            return false;
    }
    return true;
}

// Exact distribution of a sum of k i.i.d. q-ary noise symbols by dynamic
// programming over the field's additive group.
inline std::vector<double> sum_distribution(const Field& f, double epsilon, unsigned k)
{
    const std::uint32_t q = f.q();
    std::vector<double> single(q, epsilon / (q - 1));
    single[0] = 1.0 - epsilon;
    std::vector<double> dist(q, 0.0);
    dist[0] = 1.0;
    for (unsigned step = 0; step < k; ++step) {
        std::vector<double> next(q, 0.0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                next[f.add(static_cast<Elem>(a), static_cast<Elem>(b))] += dist[a] * single[b];
        dist = std::move(next);
    }
    return dist;
}

inline Word random_word(const Field& f, unsigned m, std::uint64_t seed)
{
    Word w = liftcodes::make_word(f, m);
    liftcodes::rng::Stream st(seed, 0xF00D);
    for (auto& v : w.values)
        v = static_cast<Elem>(st.below(f.q()));
    return w;
}

inline Word random_codeword(const liftcodes::LiftedCode& code, std::uint64_t seed)
{
    liftcodes::rng::Stream st(seed, 0xC0DE);
    std::vector<Elem> coeffs(code.k);
    for (auto& c : coeffs)
        c = static_cast<Elem>(st.below(code.f().q()));
    return lift_encode(code, coeffs);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < k; ++i)
        out = out * (n - i) / (i + 1);
    return out;
}

} // namespace oracles
