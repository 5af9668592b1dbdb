#pragma once

#include <cstdint>
#include <vector>

#include "liftcodes/word.hpp"

namespace liftcodes {

/// Affine subspace a + span(gamma_1..gamma_t) of F_q^m; basis columns must be
/// linearly independent. The coordinate map phi_V sends sum lambda_j gamma_j
/// to (lambda_1..lambda_t).
struct AffineSubspace {
    std::vector<Point> basis; // t columns, each of length m
    Point offset;             // length m
};

/// Rank of the basis columns equals t (Gaussian elimination).
bool has_full_rank(const Field& f, const std::vector<Point>& basis);

/// Points a + sum lambda_j gamma_j in index order of (lambda_1..lambda_t);
/// the first entry is the offset itself (lambda = 0). This ordering realizes
/// the inverse coordinate map.
std::vector<Point> subspace_points(const Field& f, const AffineSubspace& v);

/// Point indices of sum lambda_j gamma_j (zero offset) in lambda index
/// order; the decoders add these to a point index to walk a coset.
std::vector<std::uint32_t> lambda_point_indices(const Field& f, unsigned m, const std::vector<Point>& basis);

/// Word over F_q^t with value at index(y) equal to g at phi_V^{-1}(y) + a.
/// Preserves erasure markers.
Word restrict_word(const Field& f, const Word& g, const AffineSubspace& v);

/// Partial spread of F_q^m into t-dimensional subspaces through the origin
/// with pairwise trivial intersection; full (covering every nonzero vector)
/// exactly when t | m.
struct Spread {
    unsigned m = 0;
    unsigned t = 0;
    bool full = false;
    std::vector<AffineSubspace> subspaces;               // zero offsets
    std::vector<std::vector<std::uint32_t>> lambda_idx;  // per subspace, lambda tables
};

/// t | m: one-dimensional subspaces over the degree-t extension field.
/// t does not divide m: the graphs {(x, a * emb(x))} of multiplication by the
/// q^(m-t) elements of the degree-(m-t) extension, emb a fixed linear
/// injection of F_q^t. Requires 1 <= t <= m/2 (t = m = 1 allowed).
Spread build_spread(const Field& f, unsigned m, unsigned t);

std::uint64_t spread_size(std::uint32_t q, unsigned m, unsigned t);

/// All t-dimensional subspaces of F_q^m through the origin, one canonical
/// (reduced row echelon) basis per subspace.
std::vector<std::vector<Point>> enumerate_subspaces(const Field& f, unsigned m, unsigned t);

/// Canonical representative of span(basis): the reduced row echelon form,
/// flattened row-major. Equal spans compare equal.
std::vector<Elem> span_canonical(const Field& f, const std::vector<Point>& basis);

/// w'(x) = g(x + c) for a point index c.
Word translate_word(const Field& f, const Word& g, std::uint32_t c_index);

} // namespace liftcodes
