#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liftcodes/gf.hpp"

namespace liftcodes {

/// A point of F_q^m as its coordinate vector.
using Point = std::vector<Elem>;

/// A function from an enumerated point domain (F_q^dim) to F_q, stored
/// densely in index_of_point order. Values may be kErased only where an
/// operation explicitly allows erasures.
struct Word {
    std::uint32_t q = 0;
    std::uint32_t dim = 0;
    std::vector<Elem> values;

    std::size_t size() const { return values.size(); }
    Elem operator[](std::size_t i) const { return values[i]; }
    Elem& operator[](std::size_t i) { return values[i]; }
    bool operator==(const Word& other) const = default;
};

std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

/// Canonical domain order: index = sum value(a_i) * q^(m-i), so the first
/// coordinate is the most significant digit.
std::uint32_t index_of_point(std::uint32_t q, const Point& point);
Point point_of_index(std::uint32_t q, unsigned m, std::uint32_t index);

/// Coordinate-wise field addition on point indices.
std::uint32_t add_point_indices(const Field& f, unsigned m, std::uint32_t a, std::uint32_t b);

Word make_word(const Field& f, unsigned dim);

std::size_t weight(const Word& w);
std::size_t distance(const Word& a, const Word& b);
std::size_t erasure_count(const Word& w);

/// Word file format: header line "q m", then q^m whitespace-separated
/// integers in index order; erasures written as "*".
void write_word(std::ostream& out, const Word& w);
Word read_word(std::istream& in);
void write_word_file(const std::string& path, const Word& w);
Word read_word_file(const std::string& path);

} // namespace liftcodes
