#include "liftcodes/poly.hpp"

#include <cstdint>

namespace liftcodes::poly {

Poly trim(Poly a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

int degree(const Poly& a)
{
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0)
            return i;
    return -1;
}

Poly add(const Field& f, const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return trim(std::move(out));
}

Poly sub(const Field& f, const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return trim(std::move(out));
}

Poly mul(const Field& f, const Poly& a, const Poly& b)
{
    if (degree(a) < 0 || degree(b) < 0)
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return trim(std::move(out));
}

Poly scale(const Field& f, const Poly& a, Elem c)
{
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = f.mul(a[i], c);
    return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b)
{
    const int db = degree(b);
    require(db >= 0, Errc::DivisionByZero, "polynomial division by zero");
    Poly rem = trim(a);
    int dr = degree(rem);
    if (dr < db)
        return {{}, std::move(rem)};
    Poly quot(dr - db + 1, 0);
    const Elem lead_inv = f.inv(b[db]);
    while (dr >= db) {
        const Elem c = f.mul(rem[dr], lead_inv);
        quot[dr - db] = c;
        for (int i = 0; i <= db; ++i)
            rem[dr - db + i] = f.sub(rem[dr - db + i], f.mul(c, b[i]));
        rem = trim(std::move(rem));
        dr = degree(rem);
    }
    return {trim(std::move(quot)), std::move(rem)};
}

Elem eval(const Field& f, const Poly& a, Elem x)
{
    Elem acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly master_poly(const Field& f, const std::vector<Elem>& xs)
{
    Poly master{1};
    master.reserve(xs.size() + 1);
    for (Elem x : xs) {
        // Multiply by (X - x) in place.
        master.push_back(master.back());
        for (std::size_t j = master.size() - 2; j > 0; --j)
            master[j] = f.sub(master[j - 1], f.mul(x, master[j]));
        master[0] = f.mul(f.neg(x), master[0]);
    }
    return master;
}

Poly interpolate(const Field& f, const std::vector<Elem>& xs, const std::vector<Elem>& ys,
                 const Poly& master)
{
    require(xs.size() == ys.size(), Errc::LengthMismatch, "interpolation point mismatch");
    const std::size_t n = xs.size();
    Poly result(n, 0);
    Poly basis(n, 0); // master / (X - x_i) via synthetic division
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i] == 0)
            continue;
        const Elem xi = xs[i];
        basis[n - 1] = master[n];
        for (std::size_t j = n - 1; j > 0; --j)
            basis[j - 1] = f.add(master[j], f.mul(xi, basis[j]));
        const Elem denom = eval(f, basis, xi); // prod_{j != i} (x_i - x_j)
        const Elem c = f.mul(ys[i], f.inv(denom));
        for (std::size_t j = 0; j < n; ++j)
            result[j] = f.add(result[j], f.mul(c, basis[j]));
    }
    return trim(std::move(result));
}

Poly interpolate(const Field& f, const std::vector<Elem>& xs, const std::vector<Elem>& ys)
{
    return interpolate(f, xs, ys, master_poly(f, xs));
}

bool irreducible(const Field& f, const Poly& a)
{
    const int deg = degree(a);
    if (deg <= 0)
        return false;
    if (deg == 1)
        return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= f.q();
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div(d + 1, 0);
            std::uint64_t t = v;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<Elem>(t % f.q());
                t /= f.q();
            }
            div[d] = 1;
            if (degree(divmod(f, a, div).second) < 0)
                return false;
        }
    }
    return true;
}

} // namespace liftcodes::poly
