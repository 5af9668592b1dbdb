#pragma once

#include <stdexcept>
#include <string>

namespace liftcodes {

enum class Errc {
    NotPrime,
    Reducible,
    TooLarge,
    DivisionByZero,
    OutOfRange,
    BadParameters,
    DimensionMismatch,
    TooManyErasures,
    BadLength,
    LengthMismatch,
    BadSupport,
    TooLargeForExhaustive,
    NotSpc,
    TooManyLines,
    BadEpsilon,
    BadWeight,
    IoError,
};

/// Library errors carry a machine-checkable code next to the human message.
class CodeError : public std::runtime_error {
  public:
    CodeError(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg)
{
    throw CodeError(code, msg);
}

inline void require(bool cond, Errc code, const std::string& msg)
{
    if (!cond)
        fail(code, msg);
}

} // namespace liftcodes
