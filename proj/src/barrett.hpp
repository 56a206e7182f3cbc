#pragma once

// Barrett reduction for a fixed modulus, valid for any 64-bit input, plus
// the odd-modulus exact-division helpers built on 2-adic inverses. Used by
// the congruence solvers and the oracle sweeps, where hardware division
// would dominate the runtime.

#include <cstdint>

namespace quatring::detail {

struct Barrett {
    uint64_t m = 1;
    uint64_t mult = 0;  // floor(2^64 / m)

    Barrett() = default;
    explicit Barrett(uint64_t mod)
        : m(mod), mult(static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) / mod))
    {
    }

    uint64_t reduce(uint64_t v) const noexcept
    {
        uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(v) * mult) >> 64);
        uint64_t r = v - q * m;
        if (r >= m) r -= m;
        return r;
    }
};

/// Inverse of an odd value mod 2^64 (Newton iteration).
inline uint64_t inv64_odd(uint64_t v) noexcept
{
    uint64_t x = v;  // correct mod 2^3
    for (int i = 0; i < 5; ++i) x *= 2 - v * x;
    return x;
}

}  // namespace quatring::detail
