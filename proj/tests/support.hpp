// Test-only base code: the parity-check code over the domain F_q^t for
// arbitrary t (all words summing to zero). Affine-invariant with d_F = 2;
// plugs a t >= 2 instance into the lifting machinery, which ships only t = 1
// codes.
#pragma once

#include "liftcodes/base.hpp"

namespace testsupport {

using namespace liftcodes;

class ParityCode : public BaseCode {
  public:
    ParityCode(std::shared_ptr<const Field> field, unsigned t) : field_(std::move(field)), t_(t)
    {
        n_ = pow_u64(field_->q(), t_);
    }

    BaseKind kind() const override { return BaseKind::Spc; }
    const Field& field() const override { return *field_; }
    unsigned t() const override { return t_; }
    unsigned dimension() const override { return static_cast<unsigned>(n_ - 1); }
    unsigned min_distance() const override { return 2; }
    std::vector<unsigned> degree_set() const override { return {}; } // t = 1 notion only

    Word encode(const std::vector<Elem>& message) const override
    {
        require(message.size() == dimension(), Errc::LengthMismatch, "bad message length");
        Word w = make_word(*field_, t_);
        Elem sum = 0;
        for (std::size_t i = 0; i < message.size(); ++i) {
            w.values[i] = message[i];
            sum = field_->add(sum, message[i]);
        }
        w.values.back() = field_->neg(sum);
        return w;
    }

    LocalOutcome decode_bmd(const Word& received) const override
    {
        require(received.values.size() == n_, Errc::BadLength, "bad word length");
        std::size_t erased_at = n_;
        Elem sum = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (received.values[i] == kErased) {
                require(erased_at == n_, Errc::TooManyErasures, "at most one erasure");
                erased_at = i;
            } else {
                sum = field_->add(sum, received.values[i]);
            }
        }
        LocalOutcome out;
        out.codeword = received;
        if (erased_at == n_) {
            if (sum != 0)
                return LocalOutcome::star();
        } else {
            out.codeword.values[erased_at] = field_->neg(sum);
        }
        out.decoded = true;
        out.alpha = out.codeword.values[0];
        out.j = 0;
        return out;
    }

    bool contains(const Word& word) const override
    {
        Elem sum = 0;
        for (Elem v : word.values)
            sum = field_->add(sum, v);
        return sum == 0;
    }

  private:
    std::shared_ptr<const Field> field_;
    unsigned t_;
    std::uint64_t n_ = 0;
};

} // namespace testsupport
