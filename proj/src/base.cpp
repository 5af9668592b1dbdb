#include "liftcodes/base.hpp"

#include <numeric>
#include <optional>

#include "liftcodes/poly.hpp"

namespace liftcodes {

namespace {

// Gao-style decoder on an arbitrary point set: returns the polynomial of
// degree <= u within `radius` substitutions of the received values, or
// nullopt. The returned polynomial is always verified against the received
// values, so a nullopt means no such polynomial exists (unique by radius).
std::optional<poly::Poly> rs_decode_points(const Field& f, const std::vector<Elem>& xs,
                                           const std::vector<Elem>& rs, unsigned u, unsigned radius)
{
    const std::size_t n = xs.size();
    poly::Poly g0 = poly::master_poly(f, xs);
    poly::Poly g1 = poly::interpolate(f, xs, rs, g0);

    // Partial extended Euclid on (g0, g1), tracking the multiplier of g1,
    // until the remainder degree drops below (n + u + 1) / 2.
    poly::Poly r_prev = g0, r_cur = g1;
    poly::Poly v_prev, v_cur{1};
    while (2 * static_cast<long>(poly::degree(r_cur)) >= static_cast<long>(n + u + 1)) {
        auto [q, r_next] = poly::divmod(f, r_prev, r_cur);
        poly::Poly v_next = poly::sub(f, v_prev, poly::mul(f, q, v_cur));
        r_prev = std::move(r_cur);
        r_cur = std::move(r_next);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }

    poly::Poly cand;
    if (poly::degree(r_cur) < 0) {
        cand = {}; // zero polynomial
    } else {
        auto [quot, rem] = poly::divmod(f, r_cur, v_cur);
        if (poly::degree(rem) >= 0)
            return std::nullopt;
        cand = std::move(quot);
    }
    if (poly::degree(cand) > static_cast<int>(u))
        return std::nullopt;
    unsigned mismatches = 0;
    for (std::size_t i = 0; i < n; ++i)
        mismatches += poly::eval(f, cand, xs[i]) != rs[i];
    if (mismatches > radius)
        return std::nullopt;
    return cand;
}

void check_received(const BaseCode& code, const Word& received)
{
    require(received.q == code.field().q() && received.dim == code.t(), Errc::BadLength,
            "received word has wrong shape");
    const std::size_t erasures = erasure_count(received);
    require(erasures <= 1, Errc::TooManyErasures, "at most one erasure supported");
    require(erasures == 0 || code.min_distance() % 2 == 0, Errc::TooManyErasures,
            "erasures only supported for even minimum distance");
}

} // namespace

RsCode::RsCode(std::shared_ptr<const Field> field, unsigned u) : field_(std::move(field)), u_(u)
{
    require(u_ <= field_->q() - 2, Errc::BadParameters, "RS degree must be <= q-2");
}

std::vector<unsigned> RsCode::degree_set() const
{
    std::vector<unsigned> out(u_ + 1);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

Word RsCode::encode(const std::vector<Elem>& message) const
{
    require(message.size() == dimension(), Errc::LengthMismatch, "RS message length must be u+1");
    Word w = make_word(*field_, 1);
    for (std::uint32_t x = 0; x < field_->q(); ++x)
        w.values[x] = poly_eval(*field_, message, static_cast<Elem>(x));
    return w;
}

LocalOutcome RsCode::decode_bmd(const Word& received) const
{
    check_received(*this, received);
    std::vector<Elem> xs, rs;
    xs.reserve(received.size());
    rs.reserve(received.size());
    for (std::uint32_t x = 0; x < received.size(); ++x) {
        if (received.values[x] == kErased)
            continue;
        xs.push_back(static_cast<Elem>(x));
        rs.push_back(received.values[x]);
    }
    const auto cand = rs_decode_points(*field_, xs, rs, u_, radius());
    if (!cand)
        return LocalOutcome::star();

    LocalOutcome out;
    out.decoded = true;
    out.codeword = make_word(*field_, 1);
    for (std::uint32_t x = 0; x < field_->q(); ++x)
        out.codeword.values[x] = poly::eval(*field_, *cand, static_cast<Elem>(x));
    out.alpha = out.codeword.values[0];
    unsigned j = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        j += out.codeword.values[xs[i]] != rs[i];
    out.j = j;
    return out;
}

bool RsCode::contains(const Word& word) const
{
    require(word.q == field_->q() && word.dim == 1, Errc::BadLength, "word has wrong shape");
    require(erasure_count(word) == 0, Errc::TooManyErasures, "membership needs erasure-free word");
    // Dual test: the full-length evaluation code of degree <= u is orthogonal
    // to evaluations of x^j for j <= q-2-u.
    const std::uint32_t q = field_->q();
    for (unsigned j = 0; j + u_ <= q - 2; ++j) {
        Elem acc = 0;
        for (std::uint32_t x = 0; x < q; ++x)
            acc = field_->add(acc, field_->mul(word.values[x], field_->pow(static_cast<Elem>(x), j)));
        if (acc != 0)
            return false;
    }
    return true;
}

SpcCode::SpcCode(std::shared_ptr<const Field> field) : field_(std::move(field)) {}

std::vector<unsigned> SpcCode::degree_set() const
{
    std::vector<unsigned> out(field_->q() - 1);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

Word SpcCode::encode(const std::vector<Elem>& message) const
{
    require(message.size() == dimension(), Errc::LengthMismatch, "SPC message length must be q-1");
    Word w = make_word(*field_, 1);
    Elem sum = 0;
    for (std::size_t i = 0; i < message.size(); ++i) {
        w.values[i] = message[i];
        sum = field_->add(sum, message[i]);
    }
    w.values.back() = field_->neg(sum);
    return w;
}

LocalOutcome SpcCode::decode_bmd(const Word& received) const
{
    check_received(*this, received);
    std::size_t erased_at = received.size();
    Elem sum = 0;
    for (std::size_t i = 0; i < received.size(); ++i) {
        if (received.values[i] == kErased)
            erased_at = i;
        else
            sum = field_->add(sum, received.values[i]);
    }

    LocalOutcome out;
    if (erased_at == received.size()) {
        // e = 0: the received word decodes iff it already satisfies parity.
        if (sum != 0)
            return LocalOutcome::star();
        out.decoded = true;
        out.codeword = received;
    } else {
        out.decoded = true;
        out.codeword = received;
        out.codeword.values[erased_at] = field_->neg(sum);
    }
    out.alpha = out.codeword.values[0];
    out.j = 0;
    return out;
}

bool SpcCode::contains(const Word& word) const
{
    require(word.q == field_->q() && word.dim == 1, Errc::BadLength, "word has wrong shape");
    require(erasure_count(word) == 0, Errc::TooManyErasures, "membership needs erasure-free word");
    Elem sum = 0;
    for (Elem v : word.values)
        sum = field_->add(sum, v);
    return sum == 0;
}

std::shared_ptr<const BaseCode> make_base(std::shared_ptr<const Field> field, BaseKind kind, int u)
{
    if (kind == BaseKind::Spc)
        return std::make_shared<SpcCode>(std::move(field));
    require(u >= 0, Errc::BadParameters, "RS base needs a max degree u");
    return std::make_shared<RsCode>(std::move(field), static_cast<unsigned>(u));
}

} // namespace liftcodes
