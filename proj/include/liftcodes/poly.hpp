#pragma once

#include <utility>
#include <vector>

#include "liftcodes/gf.hpp"

namespace liftcodes::poly {

// Polynomials over a Field as coefficient vectors, low to high. The zero
// polynomial is the empty vector; all routines keep results trimmed.

using Poly = std::vector<Elem>;

Poly trim(Poly a);
int degree(const Poly& a); // -1 for the zero polynomial
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Elem c);
/// (quotient, remainder); divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Elem eval(const Field& f, const Poly& a, Elem x);

/// prod (X - x_i).
Poly master_poly(const Field& f, const std::vector<Elem>& xs);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); the xs
/// must be distinct. The second form reuses a precomputed master polynomial.
Poly interpolate(const Field& f, const std::vector<Elem>& xs, const std::vector<Elem>& ys);
Poly interpolate(const Field& f, const std::vector<Elem>& xs, const std::vector<Elem>& ys,
                 const Poly& master);

/// True iff `a` (monic not required) has no monic factor of degree in
/// [1, deg(a)/2], i.e. is irreducible; deg(a) >= 1 required.
bool irreducible(const Field& f, const Poly& a);

} // namespace liftcodes::poly
