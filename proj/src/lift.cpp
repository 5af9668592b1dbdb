#include "liftcodes/lift.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liftcodes/rng.hpp"

namespace liftcodes {

bool p_leq(const DegreeTuple& c, const DegreeTuple& d, unsigned p)
{
    require(c.size() == d.size(), Errc::DimensionMismatch, "tuple length mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) {
        unsigned a = c[i];
        unsigned b = d[i];
        while (a != 0 || b != 0) {
            if (a % p > b % p)
                return false;
            a /= p;
            b /= p;
        }
    }
    return true;
}

std::uint32_t mods_q(std::uint64_t a, std::uint32_t q)
{
    if (a == 0)
        return 0;
    return static_cast<std::uint32_t>((a - 1) % (q - 1)) + 1;
}

bool spc_good_tuple(const Field& f, const DegreeTuple& d)
{
    // Bad iff some c <= d (p-partial order) has deg(c) > 0 and
    // deg(c) = 0 mod (q-1). Track achievable shadow degrees coordinate by
    // coordinate; per coordinate the choices are the values c_i <= d_i.
    const unsigned p = f.p();
    std::size_t max_deg = 0;
    for (Elem di : d)
        max_deg += di;
    std::vector<char> reach(max_deg + 1, 0);
    reach[0] = 1;

    std::vector<unsigned> choices;
    std::size_t reached = 0; // highest achievable degree so far
    for (Elem di : d) {
        choices.clear();
        // All c_i with digits dominated by the digits of d_i.
        std::vector<unsigned> digits;
        for (unsigned v = di; v != 0; v /= p)
            digits.push_back(v % p);
        std::vector<unsigned> counter(digits.size(), 0);
        for (;;) {
            unsigned value = 0;
            for (std::size_t j = digits.size(); j-- > 0;)
                value = value * p + counter[j];
            choices.push_back(value);
            std::size_t j = 0;
            while (j < digits.size() && counter[j] == digits[j])
                counter[j++] = 0;
            if (j == digits.size())
                break;
            ++counter[j];
        }
        std::sort(choices.begin(), choices.end(), std::greater<>());
        if (choices.size() == 1)
            continue; // only c_i = 0
        for (std::size_t s = reached + 1; s-- > 0;) {
            if (!reach[s])
                continue;
            for (unsigned c : choices)
                if (c != 0)
                    reach[s + c] = 1;
        }
        reached += di;
    }
    const std::uint32_t q = f.q();
    for (std::size_t s = q - 1; s <= max_deg; s += q - 1)
        if (reach[s])
            return false;
    return true;
}

Word monomial_word(const Field& f, unsigned m, const DegreeTuple& d)
{
    require(d.size() == m, Errc::DimensionMismatch, "tuple length mismatch");
    Word w = make_word(f, m);
    for (std::uint32_t a = 0; a < w.values.size(); ++a) {
        Elem acc = 1;
        std::uint32_t rest = a;
        for (unsigned i = m; i-- > 0;) {
            const Elem coord = static_cast<Elem>(rest % f.q());
            rest /= f.q();
            if (d[i] != 0)
                acc = f.mul(acc, f.pow(coord, d[i]));
        }
        w.values[a] = acc;
    }
    return w;
}

bool monomial_lifts(const Field& f, unsigned m, unsigned t, const BaseCode& base, const DegreeTuple& d)
{
    require(pow_u64(f.q(), m + t) <= (1ULL << 24), Errc::TooLarge, "domain too large for the brute-force oracle");
    require(base.t() == t, Errc::BadParameters, "base code dimension must match t");
    const Word values = monomial_word(f, m, d);
    const std::uint32_t n = static_cast<std::uint32_t>(values.size());
    const std::uint64_t block = pow_u64(f.q(), t);

    Word restriction;
    restriction.q = f.q();
    restriction.dim = t;
    restriction.values.resize(block);
    for (const auto& basis : enumerate_subspaces(f, m, t)) {
        const auto lambda = lambda_point_indices(f, m, basis);
        for (std::uint32_t offset = 0; offset < n; ++offset) {
            for (std::uint64_t li = 0; li < block; ++li)
                restriction.values[li] = values.values[add_point_indices(f, m, offset, lambda[li])];
            if (!base.contains(restriction))
                return false;
        }
    }
    return true;
}

namespace {

// Scan of all q^m tuples; route per base code. RS with t = 1 walks line
// cosets (one offset per coset) instead of every offset, which is exact.
std::vector<char> good_flags(const Field& f, unsigned m, unsigned t, const BaseCode& base)
{
    const std::uint64_t n = pow_u64(f.q(), m);
    std::vector<char> flags(n, 0);

    if (base.kind() == BaseKind::Spc && t == 1) {
        for (std::uint64_t ti = 0; ti < n; ++ti)
            flags[ti] = spc_good_tuple(f, point_of_index(f.q(), m, static_cast<std::uint32_t>(ti)));
        return flags;
    }

    if (base.kind() == BaseKind::Rs && t == 1) {
        require(pow_u64(f.q(), m + 1) <= (1ULL << 24), Errc::TooLarge, "domain too large for the line scan");
        const auto dirs = enumerate_subspaces(f, m, 1);
        std::vector<std::vector<std::uint32_t>> lambda;
        lambda.reserve(dirs.size());
        for (const auto& basis : dirs)
            lambda.push_back(lambda_point_indices(f, m, basis));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::int64_t ti = 0; ti < static_cast<std::int64_t>(n); ++ti) {
            const Word values = monomial_word(f, m, point_of_index(f.q(), m, static_cast<std::uint32_t>(ti)));
            Word restriction;
            restriction.q = f.q();
            restriction.dim = 1;
            restriction.values.resize(f.q());
            std::vector<char> seen(n);
            bool good = true;
            for (std::size_t di = 0; di < lambda.size() && good; ++di) {
                std::fill(seen.begin(), seen.end(), 0);
                for (std::uint32_t rep = 0; rep < n && good; ++rep) {
                    if (seen[rep])
                        continue;
                    for (std::uint32_t li = 0; li < f.q(); ++li) {
                        const std::uint32_t pt = add_point_indices(f, m, rep, lambda[di][li]);
                        seen[pt] = 1;
                        restriction.values[li] = values.values[pt];
                    }
                    good = base.contains(restriction);
                }
            }
            flags[ti] = good;
        }
        return flags;
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t ti = 0; ti < static_cast<std::int64_t>(n); ++ti)
        flags[ti] = monomial_lifts(f, m, t, base, point_of_index(f.q(), m, static_cast<std::uint32_t>(ti)));
    return flags;
}

std::uint64_t compute_d_low(std::uint32_t q, unsigned m, unsigned t, unsigned d_f)
{
    if (m % t == 0)
        return static_cast<std::uint64_t>(d_f - 1) * ((pow_u64(q, m) - 1) / (pow_u64(q, t) - 1)) + 1;
    return static_cast<std::uint64_t>(d_f - 1) * pow_u64(q, m - t) + 1;
}

// Row echelon over GF(q) on the k x n monomial evaluation matrix, picking
// pivot columns (points) greedily in index order.
std::vector<std::uint32_t> pick_info_positions(const Field& f, std::vector<Elem> rows,
                                               std::uint64_t k, std::uint64_t n)
{
    std::vector<std::uint32_t> pivots;
    std::uint64_t r = 0;
    for (std::uint64_t col = 0; col < n && r < k; ++col) {
        std::uint64_t sel = r;
        while (sel < k && rows[sel * n + col] == 0)
            ++sel;
        if (sel == k)
            continue;
        for (std::uint64_t j = col; j < n; ++j)
            std::swap(rows[r * n + j], rows[sel * n + j]);
        const Elem inv = f.inv(rows[r * n + col]);
        for (std::uint64_t j = col; j < n; ++j)
            rows[r * n + j] = f.mul(rows[r * n + j], inv);
        for (std::uint64_t rr = r + 1; rr < k; ++rr) {
            const Elem c = rows[rr * n + col];
            if (c == 0)
                continue;
            for (std::uint64_t j = col; j < n; ++j)
                rows[rr * n + j] = f.sub(rows[rr * n + j], f.mul(c, rows[r * n + j]));
        }
        pivots.push_back(static_cast<std::uint32_t>(col));
        ++r;
    }
    require(r == k, Errc::BadParameters, "monomial evaluation matrix is rank deficient");
    return pivots;
}

// Inverse of a k x k matrix over GF(q), row-major.
std::vector<Elem> invert_matrix(const Field& f, std::vector<Elem> a, std::uint64_t k)
{
    std::vector<Elem> inv(k * k, 0);
    for (std::uint64_t i = 0; i < k; ++i)
        inv[i * k + i] = 1;
    for (std::uint64_t col = 0; col < k; ++col) {
        std::uint64_t sel = col;
        while (sel < k && a[sel * k + col] == 0)
            ++sel;
        require(sel < k, Errc::BadParameters, "singular matrix");
        if (sel != col)
            for (std::uint64_t j = 0; j < k; ++j) {
                std::swap(a[col * k + j], a[sel * k + j]);
                std::swap(inv[col * k + j], inv[sel * k + j]);
            }
        const Elem piv = f.inv(a[col * k + col]);
        for (std::uint64_t j = 0; j < k; ++j) {
            a[col * k + j] = f.mul(a[col * k + j], piv);
            inv[col * k + j] = f.mul(inv[col * k + j], piv);
        }
        for (std::uint64_t r = 0; r < k; ++r) {
            if (r == col || a[r * k + col] == 0)
                continue;
            const Elem c = a[r * k + col];
            for (std::uint64_t j = 0; j < k; ++j) {
                a[r * k + j] = f.sub(a[r * k + j], f.mul(c, a[col * k + j]));
                inv[r * k + j] = f.sub(inv[r * k + j], f.mul(c, inv[col * k + j]));
            }
        }
    }
    return inv;
}

void build_membership_sample(LiftedCode& code, const LiftOptions& options)
{
    if (code.t == 1 || options.membership_sample == 0)
        return; // for t = 1 the spread cosets already cover every affine line

    std::set<std::vector<Elem>> spread_spans;
    for (const auto& v : code.spread.subspaces)
        spread_spans.insert(span_canonical(code.f(), v.basis));

    rng::Stream st(options.sample_seed, 0);
    const std::uint32_t n = static_cast<std::uint32_t>(code.n);
    std::set<std::vector<Elem>> taken;
    const std::size_t max_attempts = 60 * options.membership_sample + 100;
    for (std::size_t attempt = 0; attempt < max_attempts && code.sample_lambda.size() < options.membership_sample;
         ++attempt) {
        std::vector<Point> basis(code.t);
        for (auto& col : basis) {
            col.resize(code.m);
            for (auto& c : col)
                c = static_cast<Elem>(st.below(code.f().q()));
        }
        if (!has_full_rank(code.f(), basis))
            continue;
        auto canon = span_canonical(code.f(), basis);
        if (spread_spans.count(canon) || taken.count(canon))
            continue;
        taken.insert(canon);
        code.sample_lambda.push_back(lambda_point_indices(code.f(), code.m, basis));
        code.sample_offsets.push_back(static_cast<std::uint32_t>(st.below(n)));
    }
}

} // namespace

LiftedCode build_lifted_code(std::shared_ptr<const Field> field, unsigned m, unsigned t,
                             std::shared_ptr<const BaseCode> base, const LiftOptions& options)
{
    require(field != nullptr && base != nullptr, Errc::BadParameters, "null inputs");
    const bool trivial = (t == 1 && m == 1);
    require(t >= 1 && (2 * t <= m || trivial), Errc::BadParameters, "need 1 <= t <= m/2");
    require(base->t() == t, Errc::BadParameters, "base code dimension must match t");
    require(base->field() == *field, Errc::BadParameters, "field mismatch");
    require(pow_u64(field->q(), m) <= (1ULL << 22), Errc::TooLarge, "code length too large");

    LiftedCode code;
    code.field = std::move(field);
    code.m = m;
    code.t = t;
    code.base = std::move(base);
    code.n = pow_u64(code.f().q(), m);

    const auto flags = good_flags(code.f(), m, t, *code.base);
    for (std::uint64_t ti = 0; ti < code.n; ++ti)
        if (flags[ti])
            code.good.push_back(point_of_index(code.f().q(), m, static_cast<std::uint32_t>(ti)));
    code.k = code.good.size();
    code.d_low = compute_d_low(code.f().q(), m, t, code.base->min_distance());
    code.e_low = (code.d_low - 1) / 2;
    code.spread = build_spread(code.f(), m, t);

    // Monomial evaluations at every point, row-major by point.
    const std::uint64_t n = code.n;
    const std::uint64_t k = code.k;
    code.eval_matrix.assign(n * k, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
        const Point pt = point_of_index(code.f().q(), m, static_cast<std::uint32_t>(a));
        for (std::uint64_t i = 0; i < k; ++i) {
            Elem acc = 1;
            for (unsigned j = 0; j < m; ++j)
                if (code.good[i][j] != 0)
                    acc = code.f().mul(acc, code.f().pow(pt[j], code.good[i][j]));
            code.eval_matrix[a * k + i] = acc;
        }
    }

    // Transposed copy (rows = monomials) for the pivot search.
    std::vector<Elem> rows(k * n);
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t i = 0; i < k; ++i)
            rows[i * n + a] = code.eval_matrix[a * k + i];
    code.info_positions = pick_info_positions(code.f(), std::move(rows), k, n);

    std::vector<Elem> bmat(k * k); // bmat[j][i] = monomial_i(info_point_j)
    for (std::uint64_t j = 0; j < k; ++j)
        for (std::uint64_t i = 0; i < k; ++i)
            bmat[j * k + i] = code.eval_matrix[static_cast<std::uint64_t>(code.info_positions[j]) * k + i];
    code.systematic_solve = invert_matrix(code.f(), std::move(bmat), k);

    build_membership_sample(code, options);
    return code;
}

Word lift_encode(const LiftedCode& code, const std::vector<Elem>& coeffs)
{
    require(coeffs.size() == code.k, Errc::BadSupport, "coefficient vector must match the good set");
    Word w = make_word(code.f(), code.m);
    const std::uint64_t k = code.k;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (code.n > 4096)
#endif
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(code.n); ++a) {
        Elem acc = 0;
        const Elem* row = code.eval_matrix.data() + a * k;
        for (std::uint64_t i = 0; i < k; ++i)
            acc = code.f().add(acc, code.f().mul(coeffs[i], row[i]));
        w.values[a] = acc;
    }
    return w;
}

Word lift_encode(const LiftedCode& code, const std::map<DegreeTuple, Elem>& coeffs)
{
    std::vector<Elem> dense(code.k, 0);
    for (const auto& [tuple, value] : coeffs) {
        const auto it = std::lower_bound(code.good.begin(), code.good.end(), tuple,
                                         [&](const DegreeTuple& a, const DegreeTuple& b) {
                                             return index_of_point(code.f().q(), a) < index_of_point(code.f().q(), b);
                                         });
        require(it != code.good.end() && *it == tuple, Errc::BadSupport,
                "coefficient on a tuple outside the good set");
        dense[static_cast<std::size_t>(it - code.good.begin())] = value;
    }
    return lift_encode(code, dense);
}

Word lift_encode_systematic(const LiftedCode& code, const std::vector<Elem>& info_values)
{
    require(info_values.size() == code.k, Errc::BadSupport, "need one value per information position");
    std::vector<Elem> coeffs(code.k, 0);
    for (std::uint64_t i = 0; i < code.k; ++i) {
        Elem acc = 0;
        for (std::uint64_t j = 0; j < code.k; ++j)
            acc = code.f().add(acc, code.f().mul(code.systematic_solve[i * code.k + j], info_values[j]));
        coeffs[i] = acc;
    }
    return lift_encode(code, coeffs);
}

bool lift_contains(const LiftedCode& code, const Word& word, MembershipMode mode)
{
    require(word.q == code.f().q() && word.dim == code.m, Errc::DimensionMismatch, "word shape mismatch");
    require(erasure_count(word) == 0, Errc::TooManyErasures, "membership needs erasure-free word");
    const Field& f = code.f();
    const std::uint32_t n = static_cast<std::uint32_t>(code.n);
    const std::uint64_t block = pow_u64(f.q(), code.t);

    Word restriction;
    restriction.q = f.q();
    restriction.dim = code.t;
    restriction.values.resize(block);
    auto check = [&](std::uint32_t offset, const std::vector<std::uint32_t>& lambda) {
        for (std::uint64_t li = 0; li < block; ++li)
            restriction.values[li] = word.values[add_point_indices(f, code.m, offset, lambda[li])];
        return code.base->contains(restriction);
    };

    if (mode == MembershipMode::Exhaustive) {
        require(pow_u64(f.q(), code.m + code.t) <= (1ULL << 24), Errc::TooLargeForExhaustive,
                "domain too large for exhaustive membership");
        for (const auto& basis : enumerate_subspaces(f, code.m, code.t)) {
            const auto lambda = lambda_point_indices(f, code.m, basis);
            for (std::uint32_t offset = 0; offset < n; ++offset)
                if (!check(offset, lambda))
                    return false;
        }
        return true;
    }

    // Fast mode: every coset of every spread subspace, then the cached
    // sample. One-sided: a true codeword passes every subspace, so this
    // never rejects one.
    std::vector<char> seen(n);
    for (const auto& lambda : code.spread.lambda_idx) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t rep = 0; rep < n; ++rep) {
            if (seen[rep])
                continue;
            for (std::uint64_t li = 0; li < block; ++li)
                seen[add_point_indices(f, code.m, rep, lambda[li])] = 1;
            if (!check(rep, lambda))
                return false;
        }
    }
    for (std::size_t i = 0; i < code.sample_lambda.size(); ++i)
        if (!check(code.sample_offsets[i], code.sample_lambda[i]))
            return false;
    return true;
}

} // namespace liftcodes
