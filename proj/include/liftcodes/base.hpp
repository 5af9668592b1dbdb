#pragma once

#include <memory>
#include <vector>

#include "liftcodes/word.hpp"

namespace liftcodes {

enum class BaseKind { Rs, Spc };

/// Result of a local bounded-minimum-distance decode: either the unique
/// codeword within radius e (with its value at the origin and the exact
/// distance j to the received word over the non-erased positions), or Star
/// when no codeword lies within the radius.
struct LocalOutcome {
    bool decoded = false; // false = Star
    Elem alpha = 0;
    unsigned j = 0;
    Word codeword;

    static LocalOutcome star() { return {}; }
};

/// Affine-invariant code of functions F_q^t -> F_q with a bounded-distance
/// decoder. The lifting machinery is written against this interface only;
/// RS and SPC (both t = 1) ship as concrete instances.
class BaseCode {
  public:
    virtual ~BaseCode() = default;

    virtual BaseKind kind() const = 0;
    virtual const Field& field() const = 0;
    virtual unsigned t() const = 0;
    virtual unsigned dimension() const = 0;
    virtual unsigned min_distance() const = 0;
    /// e = floor((d_F - 1) / 2)
    unsigned radius() const { return (min_distance() - 1) / 2; }
    /// Degree set for t = 1 codes: the exponents of the monomial basis.
    virtual std::vector<unsigned> degree_set() const = 0;

    virtual Word encode(const std::vector<Elem>& message) const = 0;

    /// Decodes up to radius() errors and, if d_F is even, one erasure.
    /// Distances are measured over the non-erased positions.
    virtual LocalOutcome decode_bmd(const Word& received) const = 0;

    /// Membership test; the word must be erasure-free.
    virtual bool contains(const Word& word) const = 0;
};

/// Extended Reed-Solomon code RS(u): evaluations of polynomials of degree at
/// most u at all q field elements in index order. Length q, dimension u+1,
/// minimum distance q-u.
class RsCode : public BaseCode {
  public:
    RsCode(std::shared_ptr<const Field> field, unsigned u);

    BaseKind kind() const override { return BaseKind::Rs; }
    const Field& field() const override { return *field_; }
    unsigned t() const override { return 1; }
    unsigned dimension() const override { return u_ + 1; }
    unsigned min_distance() const override { return field_->q() - u_; }
    std::vector<unsigned> degree_set() const override;
    unsigned max_degree() const { return u_; }

    Word encode(const std::vector<Elem>& message) const override;
    LocalOutcome decode_bmd(const Word& received) const override;
    bool contains(const Word& word) const override;

  private:
    std::shared_ptr<const Field> field_;
    unsigned u_;
};

/// Single-parity-check code: all length-q words over F_q summing to zero.
/// Equals RS(q-2) as an evaluation code; minimum distance 2.
class SpcCode : public BaseCode {
  public:
    explicit SpcCode(std::shared_ptr<const Field> field);

    BaseKind kind() const override { return BaseKind::Spc; }
    const Field& field() const override { return *field_; }
    unsigned t() const override { return 1; }
    unsigned dimension() const override { return field_->q() - 1; }
    unsigned min_distance() const override { return 2; }
    std::vector<unsigned> degree_set() const override;

    Word encode(const std::vector<Elem>& message) const override;
    LocalOutcome decode_bmd(const Word& received) const override;
    bool contains(const Word& word) const override;

  private:
    std::shared_ptr<const Field> field_;
};

std::shared_ptr<const BaseCode> make_base(std::shared_ptr<const Field> field, BaseKind kind, int u = -1);

} // namespace liftcodes
