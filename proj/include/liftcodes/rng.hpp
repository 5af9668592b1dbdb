#pragma once

#include <cstdint>

namespace liftcodes::rng {

// splitmix64 finalizer; all randomness in the library is counter-based so that
// a draw depends only on (seed, stream, counter), never on evaluation order.
inline std::uint64_t mix(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    return mix(mix(mix(seed) ^ (stream * 0xD1B54A32D192ED03ULL)) ^ (counter * 0x8CB92BA72F3D8DD7ULL));
}

/// One logical random stream, e.g. "position 17 of this decode call".
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next() { return at(seed_, stream_, counter_++); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform in [0, n) via rejection.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t threshold = -n % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold)
                return r % n;
        }
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace liftcodes::rng
