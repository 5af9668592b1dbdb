#include <doctest.h>

#include "liftcodes/gf.hpp"
#include "liftcodes/poly.hpp"
#include "liftcodes/rng.hpp"
#include "oracles.hpp"

using namespace liftcodes;

TEST_CASE("field construction picks the expected default moduli")
{
    const Field f2(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<Elem>{0, 1}); // x

    const Field f4(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1}); // x^2 + x + 1, the unique irreducible quadratic

    // Determinism across constructions.
    const Field f16a(2, 4);
    const Field f16b(2, 4);
    CHECK(f16a.modulus() == f16b.modulus());
}

TEST_CASE("field construction rejects bad parameters")
{
    try {
        Field(4, 1);
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    try {
        Field(2, 17);
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
    try {
        Field(2, 2, {0, 0, 1}); // x^2 = x * x
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::Reducible);
    }
    CHECK_NOTHROW(Field(2, 2, {1, 1, 1}));
}

TEST_CASE("arithmetic matches the worked examples")
{
    const Field f4(2, 2);
    CHECK(f4.mul(2, 3) == 1); // x * (x+1) = x^2 + x = 1 mod x^2+x+1
    for (std::uint32_t a = 0; a < 4; ++a)
        CHECK(f4.add(static_cast<Elem>(a), static_cast<Elem>(a)) == 0);

    const Field f5(5, 1);
    CHECK(f5.inv(2) == 3);
    try {
        f5.inv(0);
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("multiplication agrees with the carry-free oracle")
{
    for (const Field& f : {Field(2, 2), Field(2, 4), Field(3, 2), Field(5, 1), Field(2, 8)}) {
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
                      oracles::slow_mul(f, static_cast<Elem>(a), static_cast<Elem>(b)));
    }
}

TEST_CASE("field axioms hold on random triples")
{
    for (const Field& f : {Field(2, 1), Field(2, 2), Field(2, 3), Field(3, 2), Field(2, 4), Field(2, 8)}) {
        rng::Stream st(2024, f.q());
        for (int i = 0; i < 10000; ++i) {
            const Elem a = static_cast<Elem>(st.below(f.q()));
            const Elem b = static_cast<Elem>(st.below(f.q()));
            const Elem c = static_cast<Elem>(st.below(f.q()));
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
}

TEST_CASE("Fermat and round-trip identities, exhaustive for small q")
{
    for (const Field& f : {Field(2, 2), Field(2, 4), Field(3, 2), Field(2, 8), Field(5, 1), Field(13, 1)}) {
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            if (x != 0)
                CHECK(f.pow(static_cast<Elem>(x), f.q() - 1) == 1);
            CHECK(f.pow(static_cast<Elem>(x), f.q()) == x);
        }
    }
    for (const Field& f : {Field(2, 2), Field(2, 3), Field(2, 4), Field(3, 1), Field(13, 1)}) {
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.sub(f.add(static_cast<Elem>(a), static_cast<Elem>(b)), static_cast<Elem>(b)) == a);
    }
}

TEST_CASE("exp table has period q-1 and covers the multiplicative group")
{
    for (const Field& f : {Field(2, 2), Field(3, 2), Field(2, 5)}) {
        for (std::uint32_t x = 1; x < f.q(); ++x)
            CHECK(f.exp(f.log(static_cast<Elem>(x))) == x);
        CHECK(f.exp(0) == f.exp(f.q() - 1));
        std::vector<char> seen(f.q(), 0);
        for (std::uint32_t i = 0; i + 1 < f.q(); ++i)
            seen[f.exp(i)] = 1;
        for (std::uint32_t x = 1; x < f.q(); ++x)
            CHECK(seen[x] == 1);
    }
}

TEST_CASE("poly_eval follows the examples")
{
    const Field f4(2, 2);
    CHECK(poly_eval(f4, {3}, 2) == 3);       // constant
    CHECK(poly_eval(f4, {0, 1}, 3) == 3);    // identity
    CHECK(poly_eval(f4, {1, 0, 1}, 2) == 2); // x^2 + 1 at x = 2: 3 + 1 = 2
    CHECK(poly_eval(f4, {}, 2) == 0);        // empty sum
}

TEST_CASE("largest supported fields construct and pass spot checks")
{
    const Field f256(2, 8);
    CHECK(f256.q() == 256);
    const Field f64k(2, 16);
    CHECK(f64k.q() == 65536);
    rng::Stream st(99, 0);
    for (int i = 0; i < 200; ++i) {
        const Elem a = static_cast<Elem>(1 + st.below(f64k.q() - 1));
        const Elem b = static_cast<Elem>(1 + st.below(f64k.q() - 1));
        CHECK(f64k.mul(a, f64k.inv(a)) == 1);
        CHECK(f64k.mul(a, b) == oracles::slow_mul(f64k, a, b));
    }
}

TEST_CASE("extension fields use verified irreducible moduli")
{
    const Field f4(2, 2);
    const ExtensionField e16(f4, 2); // GF(16) built over GF(4)
    CHECK(e16.size() == 16);
    CHECK(poly::irreducible(f4, e16.modulus()));

    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b) {
            CHECK(e16.mul(a, b) == e16.mul(b, a));
            CHECK(e16.mul(a, e16.add(b, 1)) == e16.add(e16.mul(a, b), a));
        }
    // No zero divisors.
    for (std::uint32_t a = 1; a < 16; ++a)
        for (std::uint32_t b = 1; b < 16; ++b)
            CHECK(e16.mul(a, b) != 0);

    const ExtensionField trivial(f4, 1); // modulus x: the base field itself
    CHECK(trivial.size() == 4);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b)
            CHECK(trivial.mul(a, b) == f4.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
}
