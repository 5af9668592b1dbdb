#include "liftcodes/domain.hpp"

#include <algorithm>

namespace liftcodes {

namespace {

// Reduced row echelon form of the t x m matrix whose rows are `rows`.
// Returns the reduced rows; rank = number of nonzero rows.
std::vector<Point> rref(const Field& f, std::vector<Point> rows)
{
    if (rows.empty())
        return rows;
    const std::size_t m = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[sel]);
        const Elem inv = f.inv(rows[pivot_row][col]);
        for (std::size_t j = 0; j < m; ++j)
            rows[pivot_row][j] = f.mul(rows[pivot_row][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0)
                continue;
            const Elem c = rows[r][col];
            for (std::size_t j = 0; j < m; ++j)
                rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[pivot_row][j]));
        }
        ++pivot_row;
    }
    return rows;
}

std::size_t rank_of(const Field& f, const std::vector<Point>& rows)
{
    auto reduced = rref(f, rows);
    std::size_t rank = 0;
    for (const auto& row : reduced)
        rank += std::any_of(row.begin(), row.end(), [](Elem v) { return v != 0; });
    return rank;
}

} // namespace

bool has_full_rank(const Field& f, const std::vector<Point>& basis)
{
    return rank_of(f, basis) == basis.size();
}

std::vector<Point> subspace_points(const Field& f, const AffineSubspace& v)
{
    const unsigned t = static_cast<unsigned>(v.basis.size());
    const unsigned m = static_cast<unsigned>(v.offset.size());
    for (const auto& col : v.basis)
        require(col.size() == m, Errc::DimensionMismatch, "basis column length mismatch");
    require(has_full_rank(f, v.basis), Errc::BadParameters, "basis columns must be independent");

    const std::uint64_t count = pow_u64(f.q(), t);
    std::vector<Point> out;
    out.reserve(count);
    for (std::uint64_t li = 0; li < count; ++li) {
        const Point lambda = point_of_index(f.q(), t, static_cast<std::uint32_t>(li));
        Point pt = v.offset;
        for (unsigned j = 0; j < t; ++j) {
            if (lambda[j] == 0)
                continue;
            for (unsigned i = 0; i < m; ++i)
                pt[i] = f.add(pt[i], f.mul(lambda[j], v.basis[j][i]));
        }
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<std::uint32_t> lambda_point_indices(const Field& f, unsigned m, const std::vector<Point>& basis)
{
    AffineSubspace v{basis, Point(m, 0)};
    const auto pts = subspace_points(f, v);
    std::vector<std::uint32_t> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        out[i] = index_of_point(f.q(), pts[i]);
    return out;
}

Word restrict_word(const Field& f, const Word& g, const AffineSubspace& v)
{
    require(g.q == f.q(), Errc::DimensionMismatch, "word field mismatch");
    require(g.dim == v.offset.size(), Errc::DimensionMismatch, "word dimension mismatch");
    const auto pts = subspace_points(f, v);
    Word out;
    out.q = f.q();
    out.dim = static_cast<std::uint32_t>(v.basis.size());
    out.values.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        out.values[i] = g.values[index_of_point(f.q(), pts[i])];
    return out;
}

std::uint64_t spread_size(std::uint32_t q, unsigned m, unsigned t)
{
    if (m % t == 0)
        return (pow_u64(q, m) - 1) / (pow_u64(q, t) - 1);
    return pow_u64(q, m - t);
}

namespace {

// Decompose an extension element into a coordinate block: the block is the
// base-q digit string of the value, most significant digit first, matching
// index_of_point on the subvector.
void ext_to_block(const ExtensionField& ext, ExtensionField::Ext value, Elem* block)
{
    const unsigned t = ext.deg();
    for (unsigned j = 0; j < t; ++j)
        block[j] = ext.digit(value, t - 1 - j);
}

Spread build_spread_divisible(const Field& f, unsigned m, unsigned t)
{
    const ExtensionField ext(f, t);
    const unsigned r = m / t;
    const std::uint32_t big_q = ext.size();

    Spread spread;
    spread.m = m;
    spread.t = t;
    spread.full = true;

    // Directions: vectors over the extension field with first nonzero
    // coordinate equal to 1, one per one-dimensional extension subspace.
    std::vector<ExtensionField::Ext> xpow(t); // x^j, a basis of the extension over GF(q)
    for (unsigned j = 0; j < t; ++j)
        xpow[j] = static_cast<ExtensionField::Ext>(pow_u64(f.q(), j));

    std::vector<ExtensionField::Ext> dir(r, 0);
    for (unsigned lead = 0; lead < r; ++lead) {
        const std::uint64_t tail = pow_u64(big_q, r - 1 - lead);
        for (std::uint64_t suffix = 0; suffix < tail; ++suffix) {
            std::fill(dir.begin(), dir.end(), 0);
            dir[lead] = 1;
            std::uint64_t s = suffix;
            for (unsigned i = r; i-- > lead + 1;) {
                dir[i] = static_cast<ExtensionField::Ext>(s % big_q);
                s /= big_q;
            }
            AffineSubspace v;
            v.offset = Point(m, 0);
            v.basis.resize(t, Point(m, 0));
            for (unsigned j = 0; j < t; ++j)
                for (unsigned i = 0; i < r; ++i)
                    ext_to_block(ext, ext.mul(xpow[j], dir[i]), v.basis[j].data() + i * t);
            spread.subspaces.push_back(std::move(v));
        }
    }
    return spread;
}

Spread build_spread_partial(const Field& f, unsigned m, unsigned t)
{
    // Rank-metric family: V_a = {(x, coords(a * emb(x))) : x in F_q^t} for a
    // ranging over the degree-(m-t) extension; emb embeds F_q^t as the low
    // digits. Differences a - a' act with full rank, so intersections are
    // trivial.
    const unsigned d = m - t;
    const ExtensionField ext(f, d);

    Spread spread;
    spread.m = m;
    spread.t = t;
    spread.full = false;

    for (std::uint32_t a = 0; a < ext.size(); ++a) {
        AffineSubspace v;
        v.offset = Point(m, 0);
        v.basis.resize(t, Point(m, 0));
        for (unsigned j = 0; j < t; ++j) {
            v.basis[j][j] = 1;
            // emb(e_j): digit t-1-j of the extension value, matching the
            // block convention of ext_to_block.
            const auto emb = static_cast<ExtensionField::Ext>(pow_u64(f.q(), t - 1 - j));
            ext_to_block(ext, ext.mul(a, emb), v.basis[j].data() + t);
        }
        spread.subspaces.push_back(std::move(v));
    }
    return spread;
}

} // namespace

Spread build_spread(const Field& f, unsigned m, unsigned t)
{
    const bool trivial = (t == 1 && m == 1);
    require(t >= 1 && (2 * t <= m || trivial), Errc::BadParameters, "need 1 <= t <= m/2");
    require(pow_u64(f.q(), m) <= (1ULL << 24), Errc::BadParameters, "domain too large");

    Spread spread = (m % t == 0) ? build_spread_divisible(f, m, t) : build_spread_partial(f, m, t);
    spread.lambda_idx.reserve(spread.subspaces.size());
    for (const auto& v : spread.subspaces)
        spread.lambda_idx.push_back(lambda_point_indices(f, m, v.basis));
    return spread;
}

std::vector<std::vector<Point>> enumerate_subspaces(const Field& f, unsigned m, unsigned t)
{
    require(t >= 1 && t <= m, Errc::BadParameters, "bad subspace dimension");
    std::vector<std::vector<Point>> out;

    // Enumerate reduced row echelon bases directly: choose pivot columns
    // p_1 < ... < p_t, then all assignments of the free entries.
    std::vector<unsigned> pivots(t);
    for (unsigned i = 0; i < t; ++i)
        pivots[i] = i;
    for (;;) {
        std::vector<std::pair<unsigned, unsigned>> free_cells; // (row, col)
        for (unsigned r = 0; r < t; ++r)
            for (unsigned c = pivots[r] + 1; c < m; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_cells.emplace_back(r, c);

        const std::uint64_t combos = pow_u64(f.q(), static_cast<unsigned>(free_cells.size()));
        for (std::uint64_t v = 0; v < combos; ++v) {
            std::vector<Point> rows(t, Point(m, 0));
            for (unsigned r = 0; r < t; ++r)
                rows[r][pivots[r]] = 1;
            std::uint64_t s = v;
            for (const auto& [r, c] : free_cells) {
                rows[r][c] = static_cast<Elem>(s % f.q());
                s /= f.q();
            }
            out.push_back(std::move(rows));
        }

        // Next pivot combination in lexicographic order.
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && pivots[i] == m - t + i)
            --i;
        if (i < 0)
            break;
        ++pivots[i];
        for (unsigned j = i + 1; j < t; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::vector<Elem> span_canonical(const Field& f, const std::vector<Point>& basis)
{
    auto reduced = rref(f, basis);
    // Sort zero rows last; nonzero rows of an RREF are already ordered by
    // pivot column.
    std::stable_partition(reduced.begin(), reduced.end(), [](const Point& row) {
        return std::any_of(row.begin(), row.end(), [](Elem v) { return v != 0; });
    });
    std::vector<Elem> flat;
    for (const auto& row : reduced)
        flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

Word translate_word(const Field& f, const Word& g, std::uint32_t c_index)
{
    Word out = g;
    for (std::uint32_t i = 0; i < g.values.size(); ++i)
        out.values[i] = g.values[add_point_indices(f, g.dim, i, c_index)];
    return out;
}

} // namespace liftcodes
