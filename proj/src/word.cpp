#include "liftcodes/word.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace liftcodes {

std::uint64_t pow_u64(std::uint64_t base, unsigned exp)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i)
        out *= base;
    return out;
}

std::uint32_t index_of_point(std::uint32_t q, const Point& point)
{
    std::uint64_t index = 0;
    for (Elem c : point) {
        require(c < q, Errc::OutOfRange, "point coordinate out of range");
        index = index * q + c;
    }
    require(index <= 0xFFFFFFFFULL, Errc::OutOfRange, "point index overflow");
    return static_cast<std::uint32_t>(index);
}

Point point_of_index(std::uint32_t q, unsigned m, std::uint32_t index)
{
    Point point(m, 0);
    for (unsigned i = m; i-- > 0;) {
        point[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    require(index == 0, Errc::OutOfRange, "index out of range for domain");
    return point;
}

std::uint32_t add_point_indices(const Field& f, unsigned m, std::uint32_t a, std::uint32_t b)
{
    if (f.p() == 2)
        return a ^ b;
    const std::uint32_t q = f.q();
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (unsigned i = 0; i < m; ++i) {
        out += static_cast<std::uint32_t>(f.add(static_cast<Elem>(a % q), static_cast<Elem>(b % q))) * scale;
        a /= q;
        b /= q;
        scale *= q;
    }
    return out;
}

Word make_word(const Field& f, unsigned dim)
{
    Word w;
    w.q = f.q();
    w.dim = dim;
    w.values.assign(pow_u64(f.q(), dim), 0);
    return w;
}

std::size_t weight(const Word& w)
{
    std::size_t out = 0;
    for (Elem v : w.values)
        out += v != 0;
    return out;
}

std::size_t distance(const Word& a, const Word& b)
{
    require(a.q == b.q && a.dim == b.dim, Errc::DimensionMismatch, "distance between unlike words");
    std::size_t out = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        out += a.values[i] != b.values[i];
    return out;
}

std::size_t erasure_count(const Word& w)
{
    std::size_t out = 0;
    for (Elem v : w.values)
        out += v == kErased;
    return out;
}

void write_word(std::ostream& out, const Word& w)
{
    out << w.q << ' ' << w.dim << '\n';
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (i > 0)
            out << (i % 16 == 0 ? '\n' : ' ');
        if (w.values[i] == kErased)
            out << '*';
        else
            out << w.values[i];
    }
    out << '\n';
}

Word read_word(std::istream& in)
{
    Word w;
    if (!(in >> w.q >> w.dim))
        fail(Errc::IoError, "malformed word header");
    require(w.q >= 2, Errc::BadParameters, "word field size must be >= 2");
    const std::uint64_t n = pow_u64(w.q, w.dim);
    require(n <= (1ULL << 24), Errc::TooLarge, "word domain too large");
    w.values.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::string tok;
        if (!(in >> tok))
            fail(Errc::IoError, "truncated word body");
        if (tok == "*") {
            w.values.push_back(kErased);
            continue;
        }
        std::uint32_t v = 0;
        try {
            v = static_cast<std::uint32_t>(std::stoul(tok));
        } catch (const std::exception&) {
            fail(Errc::IoError, "bad word symbol: " + tok);
        }
        require(v < w.q, Errc::OutOfRange, "word symbol out of range");
        w.values.push_back(static_cast<Elem>(v));
    }
    return w;
}

void write_word_file(const std::string& path, const Word& w)
{
    std::ofstream out(path);
    if (!out)
        fail(Errc::IoError, "cannot open for writing: " + path);
    write_word(out, w);
    if (!out)
        fail(Errc::IoError, "write failed: " + path);
}

Word read_word_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::IoError, "cannot open for reading: " + path);
    return read_word(in);
}

} // namespace liftcodes
