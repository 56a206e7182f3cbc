#pragma once

// Exact arithmetic in Z/nZ: canonical residues, inverses, gcd, prime-power
// factorization and CRT splitting/recombination. Everything here is a pure
// value type; moduli stay within machine-word range (desk scale).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quatring::modint {

/// Thrown when an operation needs a unit of Z/nZ but gcd(value, n) != 1.
class NotAUnitError : public std::domain_error {
public:
    NotAUnitError(uint64_t value, uint64_t modulus, uint64_t g);

    uint64_t value() const noexcept { return value_; }
    uint64_t modulus() const noexcept { return modulus_; }
    /// The offending gcd(value, modulus), always > 1.
    uint64_t shared_factor() const noexcept { return gcd_; }

private:
    uint64_t value_;
    uint64_t modulus_;
    uint64_t gcd_;
};

uint64_t gcd(uint64_t a, uint64_t b) noexcept;

/// (x * y) mod m, correct for any m < 2^63.
inline uint64_t mul_mod(uint64_t x, uint64_t y, uint64_t m) noexcept
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

inline uint64_t add_mod(uint64_t x, uint64_t y, uint64_t m) noexcept
{
    uint64_t s = x + y;
    if (s >= m || s < x) s -= m;
    return s;
}

inline uint64_t sub_mod(uint64_t x, uint64_t y, uint64_t m) noexcept
{
    return x >= y ? x - y : x + (m - y);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) noexcept;

/// Canonical representative of x in [0, m). Accepts negative inputs.
uint64_t normalize(int64_t x, uint64_t m) noexcept;

std::optional<uint64_t> try_inverse_mod(uint64_t x, uint64_t m) noexcept;

/// Inverse of x mod m; throws NotAUnitError carrying gcd(x, m) otherwise.
uint64_t inverse_mod(uint64_t x, uint64_t m);

/// A scalar of Z/nZ, always stored as the canonical representative.
struct Residue {
    uint64_t value = 0;
    uint64_t modulus = 1;

    Residue() = default;
    Residue(int64_t v, uint64_t m)
        : value(normalize(v, m)), modulus(m)
    {
        if (m == 0) throw std::domain_error("Residue: modulus must be positive");
    }

    bool is_unit() const noexcept { return gcd(value, modulus) == 1; }
    Residue inverse() const { return Residue(static_cast<int64_t>(inverse_mod(value, modulus)), modulus); }

    friend bool operator==(const Residue& lhs, const Residue& rhs) = default;
};

inline Residue operator+(const Residue& x, const Residue& y)
{
    if (x.modulus != y.modulus) throw std::invalid_argument("Residue: modulus mismatch");
    return Residue(static_cast<int64_t>(add_mod(x.value, y.value, x.modulus)), x.modulus);
}

inline Residue operator-(const Residue& x, const Residue& y)
{
    if (x.modulus != y.modulus) throw std::invalid_argument("Residue: modulus mismatch");
    return Residue(static_cast<int64_t>(sub_mod(x.value, y.value, x.modulus)), x.modulus);
}

inline Residue operator*(const Residue& x, const Residue& y)
{
    if (x.modulus != y.modulus) throw std::invalid_argument("Residue: modulus mismatch");
    return Residue(static_cast<int64_t>(mul_mod(x.value, y.value, x.modulus)), x.modulus);
}

/// A positive integer n >= 2 together with its prime-power factorization,
/// primes strictly increasing. Base ring descriptor for everything else.
struct Modulus {
    uint64_t n = 0;
    std::vector<std::pair<uint64_t, uint32_t>> factors;  // (p, s), n = prod p^s

    /// p^s for factor index k.
    uint64_t prime_power(size_t k) const;
};

/// Deterministic trial-division primality check.
bool is_prime(uint64_t p) noexcept;

/// Unique prime-power factorization by trial division. Throws
/// std::domain_error for n < 2 (n = 1 would be the zero ring and is
/// rejected everywhere).
Modulus factorize(uint64_t n);

/// Recombine residues mod p_i^{s_i} into the unique residue mod n.
/// The part moduli must match m.factors exactly, in order.
Residue crt_combine(std::span<const Residue> parts, const Modulus& m);

/// Split a residue mod n into its components mod each p^s of m.
std::vector<Residue> crt_split(const Residue& x, const Modulus& m);

}  // namespace quatring::modint
