#include <doctest.h>

#include "liftcodes/base.hpp"
#include "liftcodes/rng.hpp"
#include "oracles.hpp"

using namespace liftcodes;

namespace {

std::shared_ptr<const Field> field(unsigned p, unsigned l)
{
    return std::make_shared<Field>(p, l);
}

} // namespace

TEST_CASE("encoding matches the examples")
{
    const RsCode rs(field(2, 2), 1);
    CHECK(rs.encode({0, 1}).values == std::vector<Elem>{0, 1, 2, 3}); // f(x) = x
    CHECK(rs.encode({0, 0}).values == std::vector<Elem>{0, 0, 0, 0});

    const SpcCode spc(field(2, 2));
    CHECK(spc.encode({1, 1, 1}).values == std::vector<Elem>{1, 1, 1, 1}); // 1+1+1+1 = 0 in char 2
    try {
        spc.encode({1, 1});
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::LengthMismatch);
    }
}

TEST_CASE("membership matches the examples")
{
    const RsCode rs(field(2, 2), 1);
    CHECK(rs.contains(Word{4, 1, {0, 0, 0, 0}}));
    CHECK(rs.contains(Word{4, 1, {0, 1, 2, 3}}));
    CHECK(!rs.contains(Word{4, 1, {1, 0, 3, 3}}));

    const SpcCode spc(field(2, 2));
    CHECK(spc.contains(Word{4, 1, {0, 0, 0, 0}}));
    CHECK(!spc.contains(Word{4, 1, {1, 0, 0, 0}}));
}

TEST_CASE("BMD decoding matches the worked examples")
{
    const RsCode rs(field(2, 2), 1); // d_F = 3, e = 1
    const auto hit = rs.decode_bmd(Word{4, 1, {1, 1, 2, 3}});
    REQUIRE(hit.decoded);
    CHECK(hit.codeword.values == std::vector<Elem>{0, 1, 2, 3});
    CHECK(hit.alpha == 0);
    CHECK(hit.j == 1);

    // A word at distance >= 2 from every codeword must decode to Star. Note
    // that (1,0,3,2) is NOT such a word: it is the codeword 1 + y. Search
    // for the first word whose oracle-verified distance to all 16 codewords
    // is >= 2.
    const auto codewords = oracles::all_codewords(rs);
    REQUIRE(codewords.size() == 16);
    CHECK(oracles::punctured_distance(Word{4, 1, {1, 0, 3, 2}}, codewords[4 + 1]) == 0);
    Word far = make_word(*field(2, 2), 1);
    bool found = false;
    for (std::uint32_t v = 0; v < 256 && !found; ++v) {
        std::uint32_t rest = v;
        for (auto& c : far.values) {
            c = static_cast<Elem>(rest % 4);
            rest /= 4;
        }
        found = true;
        for (const auto& cw : codewords)
            found = found && oracles::punctured_distance(far, cw) >= 2;
    }
    REQUIRE(found);
    CHECK(!rs.decode_bmd(far).decoded);

    const SpcCode spc(field(2, 2)); // d_F = 2 even: one erasure allowed
    const auto filled = spc.decode_bmd(Word{4, 1, {kErased, 1, 1, 1}});
    REQUIRE(filled.decoded);
    CHECK(filled.alpha == 1);
    CHECK(filled.j == 0);
    CHECK(filled.codeword.values == std::vector<Elem>{1, 1, 1, 1});

    // Parity violation without an erasure is Star (e = 0).
    CHECK(!spc.decode_bmd(Word{4, 1, {1, 0, 0, 0}}).decoded);
}

TEST_CASE("erasure contract: only even minimum distance, at most one")
{
    const RsCode odd(field(2, 2), 1); // d_F = 3
    try {
        odd.decode_bmd(Word{4, 1, {kErased, 1, 2, 3}});
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::TooManyErasures);
    }
    const SpcCode spc(field(2, 2));
    try {
        spc.decode_bmd(Word{4, 1, {kErased, kErased, 1, 1}});
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::TooManyErasures);
    }
}

TEST_CASE("BMD corrects every pattern within radius, exhaustively for small codes")
{
    rng::Stream pick(42, 0);
    for (const auto& [p, l, u] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
             {2, 1, 0}, {2, 2, 1}, {2, 2, 2}, {5, 1, 1}, {5, 1, 2}, {5, 1, 3}, {7, 1, 2}, {2, 3, 3}, {2, 3, 5}}) {
        auto f = field(p, l);
        const RsCode rs(f, u);
        const unsigned e = rs.radius();
        const std::uint32_t q = f->q();

        const auto codewords = oracles::all_codewords(rs);

        // All error patterns of weight <= e: supports of each weight, then
        // every assignment of nonzero values.
        std::vector<Word> patterns;
        std::vector<std::uint32_t> support;
        auto emit_values = [&]() {
            std::vector<std::size_t> value_idx(support.size(), 0);
            for (;;) {
                Word pat = make_word(*f, 1);
                for (std::size_t i = 0; i < support.size(); ++i)
                    pat.values[support[i]] = static_cast<Elem>(1 + value_idx[i]);
                patterns.push_back(std::move(pat));
                std::size_t carry = 0;
                while (carry < value_idx.size() && ++value_idx[carry] == q - 1) {
                    value_idx[carry] = 0;
                    ++carry;
                }
                if (carry == value_idx.size())
                    break;
            }
        };
        auto collect = [&](auto&& self, std::uint32_t next, unsigned remaining) -> void {
            if (remaining == 0) {
                emit_values();
                return;
            }
            if (next == q)
                return;
            self(self, next + 1, remaining);
            support.push_back(next);
            self(self, next + 1, remaining - 1);
            support.pop_back();
        };
        for (unsigned w = 0; w <= e; ++w)
            collect(collect, 0, w);

        // Exhaust the codeword set when affordable, else a seeded sample.
        const std::size_t budget = 400000;
        std::vector<const Word*> tested;
        if (codewords.size() * patterns.size() <= budget) {
            for (const auto& cw : codewords)
                tested.push_back(&cw);
        } else {
            tested.push_back(&codewords[0]); // the zero codeword
            while (tested.size() * patterns.size() <= budget)
                tested.push_back(&codewords[pick.below(codewords.size())]);
        }

        for (const Word* cw : tested) {
            for (const auto& pat : patterns) {
                Word received = *cw;
                unsigned wt = 0;
                for (std::uint32_t i = 0; i < q; ++i)
                    if (pat.values[i] != 0) {
                        received.values[i] = f->add(received.values[i], pat.values[i]);
                        ++wt;
                    }
                const auto outcome = rs.decode_bmd(received);
                REQUIRE(outcome.decoded);
                CHECK(outcome.codeword == *cw);
                CHECK(outcome.j == wt);
            }
        }
    }
}

TEST_CASE("even distance: e errors plus one erasure always decode")
{
    // RS(1) over GF(5): d_F = 4 even, e = 1.
    auto f = field(5, 1);
    const RsCode rs(f, 1);
    REQUIRE(rs.min_distance() == 4);
    const auto codewords = oracles::all_codewords(rs);
    for (const auto& cw : codewords) {
        for (std::uint32_t erased = 0; erased < 5; ++erased) {
            for (std::uint32_t err_pos = 0; err_pos < 5; ++err_pos) {
                if (err_pos == erased)
                    continue;
                for (Elem delta = 1; delta < 5; ++delta) {
                    Word received = cw;
                    received.values[err_pos] = f->add(received.values[err_pos], delta);
                    received.values[erased] = kErased;
                    const auto outcome = rs.decode_bmd(received);
                    REQUIRE(outcome.decoded);
                    CHECK(outcome.codeword == cw);
                    CHECK(outcome.j == 1);
                }
            }
        }
    }
}

TEST_CASE("affine invariance: permuted codewords stay codewords")
{
    rng::Stream st(7, 0);
    for (const auto& [p, l, u] : std::vector<std::tuple<unsigned, unsigned, int>>{
             {2, 2, 1}, {2, 3, 5}, {2, 2, -1}, {5, 1, 2}}) {
        auto f = field(p, l);
        const auto code = make_base(f, u < 0 ? BaseKind::Spc : BaseKind::Rs, u);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Elem> msg(code->dimension());
            for (auto& c : msg)
                c = static_cast<Elem>(st.below(f->q()));
            const Word cw = code->encode(msg);
            const Elem scale = static_cast<Elem>(1 + st.below(f->q() - 1));
            const Elem shift = static_cast<Elem>(st.below(f->q()));
            Word permuted = cw;
            for (std::uint32_t x = 0; x < f->q(); ++x)
                permuted.values[x] = cw.values[f->add(f->mul(scale, static_cast<Elem>(x)), shift)];
            CHECK(code->contains(permuted));
        }
    }
}

TEST_CASE("SPC equals RS(q-2) as an evaluation code")
{
    // Exhaustive cross-membership over all words for tiny q; encoded random
    // messages cross the two codes for larger q.
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto f = q == 4 ? field(2, 2) : field(q, 1);
        const SpcCode spc(f);
        const RsCode rs(f, f->q() - 2);
        const std::uint64_t total = pow_u64(f->q(), f->q());
        for (std::uint64_t v = 0; v < total; ++v) {
            Word w = make_word(*f, 1);
            std::uint64_t rest = v;
            for (auto& c : w.values) {
                c = static_cast<Elem>(rest % f->q());
                rest /= f->q();
            }
            CHECK(spc.contains(w) == rs.contains(w));
        }
    }
    for (const auto& [p, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}}) {
        auto f = field(p, l);
        const SpcCode spc(f);
        const RsCode rs(f, f->q() - 2);
        CHECK(spc.dimension() == rs.dimension());
        rng::Stream st(11, f->q());
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<Elem> msg(spc.dimension());
            for (auto& c : msg)
                c = static_cast<Elem>(st.below(f->q()));
            CHECK(rs.contains(spc.encode(msg)));
            CHECK(spc.contains(rs.encode(msg)));
        }
    }
}

TEST_CASE("decode_bmd agrees with the exhaustive oracle on random words")
{
    rng::Stream st(13, 1);
    for (const auto& [p, l, u] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
             {2, 2, 1}, {5, 1, 1}, {2, 3, 2}, {7, 1, 3}}) {
        auto f = field(p, l);
        const RsCode rs(f, u);
        const auto codewords = oracles::all_codewords(rs);
        for (int trial = 0; trial < 300; ++trial) {
            Word received = make_word(*f, 1);
            for (auto& v : received.values)
                v = static_cast<Elem>(st.below(f->q()));
            const bool erase = rs.min_distance() % 2 == 0 && st.below(2) == 0;
            if (erase)
                received.values[st.below(f->q())] = kErased;
            const auto expected = oracles::exhaustive_bmd(codewords, received, rs.radius());
            const auto outcome = rs.decode_bmd(received);
            REQUIRE(outcome.decoded == expected.has_value());
            if (expected) {
                CHECK(outcome.codeword == expected->first);
                CHECK(outcome.j == expected->second);
                CHECK(outcome.alpha == expected->first.values[0]);
            }
        }
    }
}
