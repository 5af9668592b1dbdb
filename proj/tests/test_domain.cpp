#include <doctest.h>

#include <set>

#include "liftcodes/domain.hpp"
#include "liftcodes/rng.hpp"
#include "oracles.hpp"

using namespace liftcodes;

TEST_CASE("point indexing matches the examples and round-trips")
{
    CHECK(index_of_point(4, {0, 0}) == 0);
    CHECK(index_of_point(4, {1, 2}) == 6);
    CHECK(point_of_index(2, 3, 5) == Point{1, 0, 1});

    rng::Stream st(5, 0);
    for (int i = 0; i < 500; ++i) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(st.below(7));
        const unsigned m = 1 + static_cast<unsigned>(st.below(4));
        const std::uint32_t idx = static_cast<std::uint32_t>(st.below(pow_u64(q, m)));
        CHECK(index_of_point(q, point_of_index(q, m, idx)) == idx);
    }

    try {
        index_of_point(4, {4, 0});
        CHECK(false);
    } catch (const CodeError& e) {
        CHECK(e.code() == Errc::OutOfRange);
    }
}

TEST_CASE("subspace_points enumerates in coefficient index order")
{
    const Field f4(2, 2);

    // t = m with the identity basis: all points in index order.
    AffineSubspace full{{Point{1, 0}, Point{0, 1}}, Point{0, 0}};
    const auto pts = subspace_points(f4, full);
    REQUIRE(pts.size() == 16);
    for (std::uint32_t i = 0; i < 16; ++i)
        CHECK(index_of_point(4, pts[i]) == i);

    const Field f2(2, 1);
    AffineSubspace line{{Point{1, 1}}, Point{0, 1}};
    const auto line_pts = subspace_points(f2, line);
    REQUIRE(line_pts.size() == 2);
    CHECK(line_pts[0] == Point{0, 1});
    CHECK(line_pts[1] == Point{1, 0});
}

TEST_CASE("subspace_points yields distinct points; rank is enforced")
{
    const Field f3(3, 1);
    rng::Stream st(17, 0);
    int built = 0;
    while (built < 40) {
        std::vector<Point> basis(2, Point(3, 0));
        for (auto& col : basis)
            for (auto& c : col)
                c = static_cast<Elem>(st.below(3));
        if (!has_full_rank(f3, basis))
            continue;
        ++built;
        AffineSubspace v{basis, Point(3, 0)};
        const auto pts = subspace_points(f3, v);
        std::set<std::uint32_t> seen;
        for (const auto& pt : pts)
            seen.insert(index_of_point(3, pt));
        CHECK(seen.size() == 9);
    }

    AffineSubspace degenerate{{Point{1, 0, 0}, Point{2, 0, 0}}, Point(3, 0)};
    CHECK_THROWS_AS(subspace_points(f3, degenerate), CodeError);
}

TEST_CASE("spread sizes match the closed form and intersections are trivial")
{
    struct Case {
        unsigned p, l, m, t;
        std::uint64_t s;
    };
    const Case cases[] = {
        {2, 1, 4, 2, 5},  // full: (16-1)/(4-1)
        {2, 1, 5, 2, 8},  // partial: 2^(5-2)
        {3, 1, 4, 2, 10}, // full: (81-1)/(9-1)
        {2, 2, 2, 1, 5},  // lines of F_4^2
        {2, 1, 6, 3, 9},  // full: (64-1)/(8-1)
        {2, 1, 1, 1, 1},  // trivial plumbing case
    };
    for (const auto& c : cases) {
        const Field f(c.p, c.l);
        const Spread sp = build_spread(f, c.m, c.t);
        CHECK(sp.subspaces.size() == c.s);
        CHECK(sp.subspaces.size() == spread_size(f.q(), c.m, c.t));
        CHECK(sp.full == (c.m % c.t == 0));

        // Pairwise trivial intersection, exhaustive over the point sets.
        std::vector<std::set<std::uint32_t>> point_sets;
        for (const auto& lambda : sp.lambda_idx)
            point_sets.emplace_back(lambda.begin(), lambda.end());
        for (std::size_t i = 0; i < point_sets.size(); ++i)
            for (std::size_t j = i + 1; j < point_sets.size(); ++j) {
                std::vector<std::uint32_t> common;
                std::set_intersection(point_sets[i].begin(), point_sets[i].end(),
                                      point_sets[j].begin(), point_sets[j].end(),
                                      std::back_inserter(common));
                REQUIRE(common == std::vector<std::uint32_t>{0});
            }

        // Full spreads cover every nonzero vector exactly once.
        if (sp.full) {
            std::vector<int> hits(pow_u64(f.q(), c.m), 0);
            for (const auto& pts : point_sets)
                for (std::uint32_t idx : pts)
                    ++hits[idx];
            for (std::size_t idx = 1; idx < hits.size(); ++idx)
                CHECK(hits[idx] == 1);
        }

        for (const auto& v : sp.subspaces)
            CHECK(has_full_rank(f, v.basis));
    }

    const Field f2(2, 1);
    CHECK_THROWS_AS(build_spread(f2, 3, 2), CodeError); // t > m/2
}

TEST_CASE("restrict_word follows the definition")
{
    const Field f2(2, 1);

    // Constant words restrict to constants.
    Word g = make_word(f2, 2);
    std::fill(g.values.begin(), g.values.end(), 1);
    AffineSubspace v{{Point{1, 1}}, Point{1, 0}};
    Word r = restrict_word(f2, g, v);
    CHECK(r.values == std::vector<Elem>{1, 1});

    // Indicator of (1,0) restricted to the x-axis from the origin.
    Word ind = make_word(f2, 2);
    ind.values[index_of_point(2, {1, 0})] = 1;
    AffineSubspace axis{{Point{1, 0}}, Point{0, 0}};
    CHECK(restrict_word(f2, ind, axis).values == std::vector<Elem>{0, 1});

    // Value at the origin of the restriction equals g at the offset.
    const Field f4(2, 2);
    const Word rnd = oracles::random_word(f4, 3, 77);
    rng::Stream st(3, 0);
    for (int i = 0; i < 100; ++i) {
        std::vector<Point> basis(1, Point(3, 0));
        for (auto& c : basis[0])
            c = static_cast<Elem>(st.below(4));
        if (!has_full_rank(f4, basis))
            continue;
        const Point offset = point_of_index(4, 3, static_cast<std::uint32_t>(st.below(64)));
        const Word res = restrict_word(f4, rnd, {basis, offset});
        CHECK(res.values[0] == rnd.values[index_of_point(4, offset)]);
    }
}

TEST_CASE("restriction shift identity within a coset")
{
    // g_{a'}(y) = g_a(y + phi_V(a' - a)) for a' in a + V.
    const Field f4(2, 2);
    const Word g = oracles::random_word(f4, 2, 123);
    rng::Stream st(9, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Point dir(2, 0);
        do {
            for (auto& c : dir)
                c = static_cast<Elem>(st.below(4));
        } while (dir == Point{0, 0});
        const Point a = point_of_index(4, 2, static_cast<std::uint32_t>(st.below(16)));
        const Elem shift_coeff = static_cast<Elem>(st.below(4));
        Point a2 = a;
        for (unsigned i = 0; i < 2; ++i)
            a2[i] = f4.add(a2[i], f4.mul(shift_coeff, dir[i]));

        const Word ra = restrict_word(f4, g, {{dir}, a});
        const Word ra2 = restrict_word(f4, g, {{dir}, a2});
        for (std::uint32_t y = 0; y < 4; ++y)
            CHECK(ra2.values[y] == ra.values[f4.add(static_cast<Elem>(y), shift_coeff)]);
    }
}

TEST_CASE("restriction preserves erasures")
{
    const Field f2(2, 1);
    Word g = make_word(f2, 2);
    g.values[index_of_point(2, {1, 1})] = kErased;
    AffineSubspace diag{{Point{1, 1}}, Point{0, 0}};
    const Word r = restrict_word(f2, g, diag);
    CHECK(r.values == std::vector<Elem>{0, kErased});
}

TEST_CASE("subspace enumeration counts Gaussian binomials")
{
    const Field f2(2, 1);
    CHECK(enumerate_subspaces(f2, 4, 2).size() == 35);  // [4 2]_2
    CHECK(enumerate_subspaces(f2, 4, 1).size() == 15);
    const Field f4(2, 2);
    CHECK(enumerate_subspaces(f4, 2, 1).size() == 5);
    CHECK(enumerate_subspaces(f4, 3, 1).size() == 21);

    // Every enumerated basis is full rank and canonical forms are distinct.
    std::set<std::vector<Elem>> canon;
    for (const auto& basis : enumerate_subspaces(f2, 4, 2)) {
        CHECK(has_full_rank(f2, basis));
        canon.insert(span_canonical(f2, basis));
    }
    CHECK(canon.size() == 35);
}

TEST_CASE("translate_word shifts the domain")
{
    const Field f4(2, 2);
    const Word g = oracles::random_word(f4, 2, 31);
    const std::uint32_t c = 7;
    const Word shifted = translate_word(f4, g, c);
    for (std::uint32_t i = 0; i < 16; ++i)
        CHECK(shifted.values[i] == g.values[add_point_indices(f4, 2, i, c)]);
    CHECK(translate_word(f4, shifted, c) == g); // characteristic 2: involution
}
