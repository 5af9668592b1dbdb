#pragma once

#include <cstdint>
#include <vector>

#include "liftcodes/errors.hpp"

namespace liftcodes {

/// Field element, canonically encoded as the integer whose base-p digits are
/// the coefficients of its GF(p)[x] representative (constant term = least
/// significant digit). Valid values are < q.
using Elem = std::uint16_t;

/// Erasure marker for words; never a valid element (q <= 2^16).
inline constexpr Elem kErased = 0xFFFF;

/// Arithmetic context for GF(q), q = p^l <= 2^16. Immutable after
/// construction and safe for concurrent shared use; all operations are pure.
/// Multiplication and inversion go through exp/log tables of a fixed
/// generator; addition is digitwise mod p (plain XOR when p = 2).
class Field {
  public:
    /// Uses the lexicographically smallest irreducible monic modulus of
    /// degree l over GF(p) (deterministic across runs).
    Field(unsigned p, unsigned l);

    /// `modulus` is the monic degree-l polynomial as base-p digits, low to
    /// high, length l+1, leading digit 1. Verified irreducible.
    Field(unsigned p, unsigned l, const std::vector<Elem>& modulus);

    unsigned p() const { return p_; }
    unsigned l() const { return l_; }
    std::uint32_t q() const { return q_; }
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const
    {
        return p_ == 2 ? static_cast<Elem>(a ^ b) : add_slow(a, b);
    }
    Elem sub(Elem a, Elem b) const
    {
        return p_ == 2 ? static_cast<Elem>(a ^ b) : sub_slow(a, b);
    }
    Elem neg(Elem a) const { return sub(0, a); }

    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[(static_cast<std::uint32_t>(log_[a]) + log_[b]) % (q_ - 1)];
    }

    Elem inv(Elem a) const
    {
        require(a != 0, Errc::DivisionByZero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const
    {
        if (a == 0)
            return e == 0 ? Elem{1} : Elem{0};
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    }

    /// i-th power of the fixed generator (i taken mod q-1).
    Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
    /// Discrete log base the fixed generator; a != 0.
    std::uint32_t log(Elem a) const
    {
        require(a != 0, Errc::DivisionByZero, "log of zero");
        return log_[a];
    }
    Elem generator() const { return exp_[q_ == 2 ? 0 : 1]; }

    /// Base-p digit i of an element encoding.
    unsigned digit(Elem a, unsigned i) const;

    bool operator==(const Field& other) const
    {
        return p_ == other.p_ && l_ == other.l_ && modulus_ == other.modulus_;
    }

  private:
    void init(const std::vector<Elem>* supplied);
    Elem add_slow(Elem a, Elem b) const;
    Elem sub_slow(Elem a, Elem b) const;

    unsigned p_ = 0;
    unsigned l_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_;          // size q-1, exp_[i] = g^i
    std::vector<std::uint32_t> log_; // size q, log_[exp_[i]] = i
};

/// Horner evaluation of sum coeffs[i] x^i; coefficients low to high.
Elem poly_eval(const Field& f, const std::vector<Elem>& coeffs, Elem x);

/// Degree-`deg` extension of GF(q), elements encoded as integers whose
/// base-q digits are coefficients over GF(q) (constant term least
/// significant). Used for the spread constructions; arithmetic is
/// computed on demand, no tables. Default modulus is the lexicographically
/// smallest irreducible monic polynomial of the given degree over GF(q).
class ExtensionField {
  public:
    using Ext = std::uint32_t;

    ExtensionField(const Field& base, unsigned deg);

    const Field& base() const { return base_; }
    unsigned deg() const { return deg_; }
    std::uint32_t size() const { return size_; }
    const std::vector<Elem>& modulus() const { return modulus_; }

    Ext add(Ext a, Ext b) const;
    Ext mul(Ext a, Ext b) const;
    Elem digit(Ext a, unsigned i) const;
    Ext from_digits(const std::vector<Elem>& digits) const;

  private:
    const Field& base_;
    unsigned deg_;
    std::uint32_t size_;
    std::vector<Elem> modulus_; // coefficients in GF(q), low to high, monic
};

} // namespace liftcodes
