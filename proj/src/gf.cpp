#include "liftcodes/gf.hpp"

#include <algorithm>

#include "liftcodes/poly.hpp"

namespace liftcodes {

namespace {

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Polynomials over GF(p) as digit vectors mod p, low to high. Only needed to
// bootstrap Field construction; everything after that runs on tables.
using Zp = std::vector<unsigned>;

int zp_degree(const Zp& a)
{
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0)
            return i;
    return -1;
}

// Remainder of a mod b, b monic.
Zp zp_rem(Zp a, const Zp& b, unsigned p)
{
    const int db = zp_degree(b);
    for (int da = zp_degree(a); da >= db; da = zp_degree(a)) {
        const unsigned c = a[da];
        for (int i = 0; i <= db; ++i) {
            const unsigned s = (c * b[i]) % p;
            a[da - db + i] = (a[da - db + i] + p - s) % p;
        }
    }
    return a;
}

Zp zp_mulmod(const Zp& a, const Zp& b, const Zp& mod, unsigned p)
{
    Zp prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    prod = zp_rem(std::move(prod), mod, p);
    prod.resize(zp_degree(mod)); // keep repeated products from growing
    return prod;
}

bool zp_irreducible(const Zp& a, unsigned p)
{
    const int deg = zp_degree(a);
    if (deg <= 0)
        return false;
    if (deg == 1)
        return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Zp div(d + 1, 0);
            std::uint64_t t = v;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            div[d] = 1;
            if (zp_degree(zp_rem(a, div, p)) < 0)
                return false;
        }
    }
    return true;
}

std::vector<unsigned> prime_factors(std::uint32_t n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Zp to_zp(const std::vector<Elem>& digits)
{
    return Zp(digits.begin(), digits.end());
}

} // namespace

Field::Field(unsigned p, unsigned l) : p_(p), l_(l)
{
    init(nullptr);
}

Field::Field(unsigned p, unsigned l, const std::vector<Elem>& modulus) : p_(p), l_(l)
{
    init(&modulus);
}

void Field::init(const std::vector<Elem>* supplied)
{
    require(is_prime(p_), Errc::NotPrime, "p must be prime");
    require(l_ >= 1, Errc::BadParameters, "l must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < l_; ++i) {
        q *= p_;
        require(q <= 65536, Errc::TooLarge, "p^l must be <= 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (supplied != nullptr) {
        require(supplied->size() == l_ + 1, Errc::BadParameters, "modulus must have degree l");
        require((*supplied)[l_] == 1, Errc::BadParameters, "modulus must be monic");
        for (Elem d : *supplied)
            require(d < p_, Errc::BadParameters, "modulus digits must be < p");
        require(zp_irreducible(to_zp(*supplied), p_), Errc::Reducible, "modulus is reducible");
        modulus_ = *supplied;
    } else {
        // Candidates in increasing integer encoding of the low coefficients,
        // which is lexicographic order on the digit vectors read high-to-low.
        for (std::uint32_t v = 0;; ++v) {
            Zp cand(l_ + 1, 0);
            std::uint32_t t = v;
            for (unsigned i = 0; i < l_; ++i) {
                cand[i] = t % p_;
                t /= p_;
            }
            cand[l_] = 1;
            if (zp_irreducible(cand, p_)) {
                modulus_.assign(cand.begin(), cand.end());
                break;
            }
        }
    }

    // exp/log tables from the smallest generator of F_q^*.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    const Zp mod = to_zp(modulus_);
    auto elem_to_zp = [&](Elem a) {
        Zp out(l_, 0);
        for (unsigned i = 0; i < l_; ++i) {
            out[i] = a % p_;
            a = static_cast<Elem>(a / p_);
        }
        return out;
    };
    auto zp_to_elem = [&](const Zp& a) {
        std::uint32_t v = 0;
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            v = v * p_ + a[i];
        return static_cast<Elem>(v);
    };
    auto pow_slow = [&](Elem base, std::uint32_t e) {
        Zp acc(1, 1);
        Zp b = elem_to_zp(base);
        while (e > 0) {
            if (e & 1)
                acc = zp_mulmod(acc, b, mod, p_);
            b = zp_mulmod(b, b, mod, p_);
            e >>= 1;
        }
        return zp_to_elem(acc);
    };
    const auto factors = prime_factors(q_ - 1);
    Elem gen = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (unsigned r : factors) {
            if (pow_slow(static_cast<Elem>(cand), (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = static_cast<Elem>(cand);
            break;
        }
    }
    Zp acc(1, 1);
    const Zp g = elem_to_zp(gen);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        const Elem e = zp_to_elem(acc);
        exp_[i] = e;
        log_[e] = i;
        acc = zp_mulmod(acc, g, mod, p_);
    }
}

Elem Field::add_slow(Elem a, Elem b) const
{
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (unsigned i = 0; i < l_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a = static_cast<Elem>(a / p_);
        b = static_cast<Elem>(b / p_);
        scale *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::sub_slow(Elem a, Elem b) const
{
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (unsigned i = 0; i < l_; ++i) {
        out += ((a % p_ + p_ - b % p_) % p_) * scale;
        a = static_cast<Elem>(a / p_);
        b = static_cast<Elem>(b / p_);
        scale *= p_;
    }
    return static_cast<Elem>(out);
}

unsigned Field::digit(Elem a, unsigned i) const
{
    for (unsigned k = 0; k < i; ++k)
        a = static_cast<Elem>(a / p_);
    return a % p_;
}

Elem poly_eval(const Field& f, const std::vector<Elem>& coeffs, Elem x)
{
    Elem acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

ExtensionField::ExtensionField(const Field& base, unsigned deg) : base_(base), deg_(deg)
{
    require(deg >= 1, Errc::BadParameters, "extension degree must be positive");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < deg; ++i) {
        size *= base.q();
        require(size <= 65536, Errc::TooLarge, "extension field too large");
    }
    size_ = static_cast<std::uint32_t>(size);

    for (std::uint32_t v = 0;; ++v) {
        poly::Poly cand(deg + 1, 0);
        std::uint32_t t = v;
        for (unsigned i = 0; i < deg; ++i) {
            cand[i] = static_cast<Elem>(t % base.q());
            t /= base.q();
        }
        cand[deg] = 1;
        if (poly::irreducible(base, cand)) {
            modulus_ = cand;
            break;
        }
    }
}

ExtensionField::Ext ExtensionField::add(Ext a, Ext b) const
{
    Ext out = 0;
    std::uint32_t scale = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        out += base_.add(static_cast<Elem>(a % base_.q()), static_cast<Elem>(b % base_.q())) * scale;
        a /= base_.q();
        b /= base_.q();
        scale *= base_.q();
    }
    return out;
}

ExtensionField::Ext ExtensionField::mul(Ext a, Ext b) const
{
    const std::uint32_t q = base_.q();
    poly::Poly pa(deg_, 0);
    poly::Poly pb(deg_, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        pa[i] = static_cast<Elem>(a % q);
        pb[i] = static_cast<Elem>(b % q);
        a /= q;
        b /= q;
    }
    poly::Poly prod = poly::mul(base_, pa, pb);
    prod = poly::divmod(base_, prod, modulus_).second;
    Ext out = 0;
    for (int i = static_cast<int>(prod.size()) - 1; i >= 0; --i)
        out = out * q + prod[i];
    return out;
}

Elem ExtensionField::digit(Ext a, unsigned i) const
{
    for (unsigned k = 0; k < i; ++k)
        a /= base_.q();
    return static_cast<Elem>(a % base_.q());
}

ExtensionField::Ext ExtensionField::from_digits(const std::vector<Elem>& digits) const
{
    Ext out = 0;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
        out = out * base_.q() + digits[i];
    return out;
}

} // namespace liftcodes
