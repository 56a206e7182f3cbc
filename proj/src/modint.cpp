#include "modint.hpp"

#include <string>

namespace quatring::modint {

NotAUnitError::NotAUnitError(uint64_t value, uint64_t modulus, uint64_t g)
    : std::domain_error("not a unit: gcd(" + std::to_string(value) + ", "
                        + std::to_string(modulus) + ") = " + std::to_string(g)),
      value_(value), modulus_(modulus), gcd_(g)
{
}

uint64_t gcd(uint64_t a, uint64_t b) noexcept
{
    while (b != 0) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) noexcept
{
    if (m == 1) return 0;
    uint64_t acc = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

uint64_t normalize(int64_t x, uint64_t m) noexcept
{
    if (m == 0) return 0;
    if (x >= 0 && static_cast<uint64_t>(x) < m) return static_cast<uint64_t>(x);
    int64_t sm = static_cast<int64_t>(m);
    int64_t r = x % sm;
    if (r < 0) r += sm;
    return static_cast<uint64_t>(r);
}

std::optional<uint64_t> try_inverse_mod(uint64_t x, uint64_t m) noexcept
{
    // Extended Euclid on (x, m); track only the coefficient of x.
    int64_t t = 0, new_t = 1;
    uint64_t r = m, new_r = x % m;
    while (new_r != 0) {
        uint64_t q = r / new_r;
        int64_t tmp_t = t - static_cast<int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) return std::nullopt;
    return normalize(t, m);
}

uint64_t inverse_mod(uint64_t x, uint64_t m)
{
    auto inv = try_inverse_mod(x, m);
    if (!inv) throw NotAUnitError(x % m, m, gcd(x % m, m));
    return *inv;
}

uint64_t Modulus::prime_power(size_t k) const
{
    uint64_t q = 1;
    for (uint32_t i = 0; i < factors[k].second; ++i) q *= factors[k].first;
    return q;
}

bool is_prime(uint64_t p) noexcept
{
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Modulus factorize(uint64_t n)
{
    if (n < 2) throw std::domain_error("factorize: modulus must be at least 2");
    Modulus m;
    m.n = n;
    uint64_t rest = n;
    for (uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (rest % d != 0) continue;
        uint32_t e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        m.factors.emplace_back(d, e);
    }
    if (rest > 1) m.factors.emplace_back(rest, 1);
    return m;
}

Residue crt_combine(std::span<const Residue> parts, const Modulus& m)
{
    if (parts.size() != m.factors.size())
        throw std::invalid_argument("crt_combine: part count does not match factorization");
    uint64_t acc = 0;
    for (size_t k = 0; k < parts.size(); ++k) {
        uint64_t pk = m.prime_power(k);
        if (parts[k].modulus != pk)
            throw std::invalid_argument("crt_combine: part modulus does not match factorization");
        uint64_t cof = m.n / pk;
        uint64_t inv = inverse_mod(cof % pk, pk);
        // term = value * cofactor * (cofactor^-1 mod pk), reduced mod n
        uint64_t term = mul_mod(mul_mod(parts[k].value, cof, m.n), inv, m.n);
        acc = add_mod(acc, term, m.n);
    }
    return Residue(static_cast<int64_t>(acc), m.n);
}

std::vector<Residue> crt_split(const Residue& x, const Modulus& m)
{
    if (x.modulus != m.n)
        throw std::invalid_argument("crt_split: residue modulus does not match");
    std::vector<Residue> out;
    out.reserve(m.factors.size());
    for (size_t k = 0; k < m.factors.size(); ++k) {
        uint64_t pk = m.prime_power(k);
        out.emplace_back(static_cast<int64_t>(x.value % pk), pk);
    }
    return out;
}

}  // namespace quatring::modint
