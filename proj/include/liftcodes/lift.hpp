#pragma once

#include <map>
#include <memory>

#include "liftcodes/base.hpp"
#include "liftcodes/domain.hpp"

namespace liftcodes {

/// Exponent tuple d in Z_q^m of a monomial x^d. Enumerated in the same index
/// order as points.
using DegreeTuple = std::vector<Elem>;

/// Digitwise base-p dominance: every base-p digit of every c_i is <= the
/// corresponding digit of d_i.
bool p_leq(const DegreeTuple& c, const DegreeTuple& d, unsigned p);

/// 0 -> 0; a > 0 -> the unique b in [1, q-1] with a = b (mod q-1).
std::uint32_t mods_q(std::uint64_t a, std::uint32_t q);

/// Goodness criterion for SPC lifts: true iff no c <= d in the p-partial
/// order has mods_q(deg(c)) = q-1. Closed form, any m.
bool spc_good_tuple(const Field& f, const DegreeTuple& d);

/// Evaluations of x^d over all of F_q^m (0^0 = 1).
Word monomial_word(const Field& f, unsigned m, const DegreeTuple& d);

/// Brute-force oracle: true iff the restriction of x^d to every
/// t-dimensional affine subspace (every canonical basis, every offset) lies
/// in the base code. Guarded by q^(m+t) <= 2^24.
bool monomial_lifts(const Field& f, unsigned m, unsigned t, const BaseCode& base, const DegreeTuple& d);

/// Lifted code L(F): all functions F_q^m -> F_q whose restriction to every
/// t-dimensional affine subspace lies in the base code. The good monomials
/// form a basis; k = |good|.
struct LiftedCode {
    std::shared_ptr<const Field> field;
    unsigned m = 0;
    unsigned t = 0;
    std::shared_ptr<const BaseCode> base;

    std::vector<DegreeTuple> good; // ascending tuple-index order
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d_low = 0; // spread-based minimum-distance lower bound
    std::uint64_t e_low = 0; // floor((d_low-1)/2)

    Spread spread;
    std::vector<std::uint32_t> info_positions; // k point indices, ascending

    // Dense helpers: monomial evaluations (n x k, row-major by point) and the
    // k x k solve matrix mapping info-position values to coefficients.
    std::vector<Elem> eval_matrix;
    std::vector<Elem> systematic_solve;

    // Deterministic sample of non-spread affine subspaces for fast
    // membership filtering (empty when the spread already covers every
    // subspace, i.e. t = 1).
    std::vector<std::vector<std::uint32_t>> sample_lambda;
    std::vector<std::uint32_t> sample_offsets;

    const Field& f() const { return *field; }
};

struct LiftOptions {
    std::size_t membership_sample = 200;
    std::uint64_t sample_seed = 0x6C696674u;
};

LiftedCode build_lifted_code(std::shared_ptr<const Field> field, unsigned m, unsigned t,
                             std::shared_ptr<const BaseCode> base, const LiftOptions& options = {});

/// Word value at point a = sum over good tuples of coeffs[d] * a^d.
Word lift_encode(const LiftedCode& code, const std::vector<Elem>& coeffs);
Word lift_encode(const LiftedCode& code, const std::map<DegreeTuple, Elem>& coeffs);

/// Solves for the coefficients matching the given values on the information
/// positions, then evaluates everywhere.
Word lift_encode_systematic(const LiftedCode& code, const std::vector<Elem>& info_values);

enum class MembershipMode {
    Exhaustive, // every affine subspace; the oracle
    Fast,       // spread cosets plus the cached sample; never rejects a codeword
};

bool lift_contains(const LiftedCode& code, const Word& word, MembershipMode mode = MembershipMode::Fast);

} // namespace liftcodes
