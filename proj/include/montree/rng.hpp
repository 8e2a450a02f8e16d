#pragma once

#include <cstdint>
#include <random>

namespace montree {

// mt19937_64 output is pinned by the standard; the bounded draws below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined.
using Rng = std::mt19937_64;

// Uniform in [0, n) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace montree
