#include "quat.hpp"

#include <sstream>

namespace quatring::quat {

using modint::add_mod;
using modint::mul_mod;
using modint::normalize;
using modint::sub_mod;

BudgetExceededError::BudgetExceededError(uint64_t required, uint64_t budget)
    : std::length_error("enumeration budget exceeded: need " + std::to_string(required)
                        + " elements, budget " + std::to_string(budget)),
      required_(required), budget_(budget)
{
}

RingParams::RingParams(modint::Modulus m, int64_t a_in, int64_t b_in) : modulus(std::move(m))
{
    a = normalize(a_in, modulus.n);
    b = normalize(b_in, modulus.n);
    if (uint64_t g = modint::gcd(a, modulus.n); g != 1)
        throw modint::NotAUnitError(a, modulus.n, g);
    if (uint64_t g = modint::gcd(b, modulus.n); g != 1)
        throw modint::NotAUnitError(b, modulus.n, g);
}

RingHandle make_ring(uint64_t n, int64_t a, int64_t b)
{
    // Desk-scale moduli; keeps every coefficient product inside a word and
    // the int64 crossings in the API exact.
    if (n > (uint64_t(1) << 31))
        throw std::domain_error("make_ring: modulus exceeds the supported range (2^31)");
    return std::make_shared<const RingParams>(modint::factorize(n), a, b);
}

void mul_coeffs(uint64_t n, uint64_t a, uint64_t b, const std::array<uint64_t, 4>& x,
                const std::array<uint64_t, 4>& y, std::array<uint64_t, 4>& out) noexcept
{
    uint64_t ab = mul_mod(a, b, n);

    uint64_t r0 = mul_mod(x[0], y[0], n);
    r0 = add_mod(r0, mul_mod(a, mul_mod(x[1], y[1], n), n), n);
    r0 = add_mod(r0, mul_mod(b, mul_mod(x[2], y[2], n), n), n);
    r0 = sub_mod(r0, mul_mod(ab, mul_mod(x[3], y[3], n), n), n);

    uint64_t r1 = add_mod(mul_mod(x[0], y[1], n), mul_mod(x[1], y[0], n), n);
    r1 = sub_mod(r1, mul_mod(b, mul_mod(x[2], y[3], n), n), n);
    r1 = add_mod(r1, mul_mod(b, mul_mod(x[3], y[2], n), n), n);

    uint64_t r2 = add_mod(mul_mod(x[0], y[2], n), mul_mod(x[2], y[0], n), n);
    r2 = add_mod(r2, mul_mod(a, mul_mod(x[1], y[3], n), n), n);
    r2 = sub_mod(r2, mul_mod(a, mul_mod(x[3], y[1], n), n), n);

    uint64_t r3 = add_mod(mul_mod(x[0], y[3], n), mul_mod(x[3], y[0], n), n);
    r3 = add_mod(r3, mul_mod(x[1], y[2], n), n);
    r3 = sub_mod(r3, mul_mod(x[2], y[1], n), n);

    out = {r0, r1, r2, r3};
}

Quaternion::Quaternion(RingHandle ring, std::array<int64_t, 4> coeffs) : ring_(std::move(ring))
{
    uint64_t n = ring_->n();
    for (size_t idx = 0; idx < 4; ++idx) c_[idx] = normalize(coeffs[idx], n);
}

void Quaternion::require_same_ring(const Quaternion& rhs) const
{
    if (!(*ring_ == *rhs.ring_))
        throw std::invalid_argument("quaternion ring mismatch: ("
                                    + std::to_string(ring_->a) + "," + std::to_string(ring_->b)
                                    + " / Z/" + std::to_string(ring_->n()) + ") vs ("
                                    + std::to_string(rhs.ring_->a) + "," + std::to_string(rhs.ring_->b)
                                    + " / Z/" + std::to_string(rhs.ring_->n()) + ")");
}

Quaternion Quaternion::operator+(const Quaternion& rhs) const
{
    require_same_ring(rhs);
    Quaternion out = *this;
    uint64_t n = ring_->n();
    for (size_t idx = 0; idx < 4; ++idx) out.c_[idx] = add_mod(c_[idx], rhs.c_[idx], n);
    return out;
}

Quaternion Quaternion::operator-(const Quaternion& rhs) const
{
    require_same_ring(rhs);
    Quaternion out = *this;
    uint64_t n = ring_->n();
    for (size_t idx = 0; idx < 4; ++idx) out.c_[idx] = sub_mod(c_[idx], rhs.c_[idx], n);
    return out;
}

Quaternion Quaternion::operator-() const
{
    Quaternion out = *this;
    uint64_t n = ring_->n();
    for (size_t idx = 0; idx < 4; ++idx) out.c_[idx] = sub_mod(0, c_[idx], n);
    return out;
}

Quaternion Quaternion::operator*(const Quaternion& rhs) const
{
    require_same_ring(rhs);
    Quaternion out = *this;
    mul_coeffs(ring_->n(), ring_->a, ring_->b, c_, rhs.c_, out.c_);
    return out;
}

bool Quaternion::operator==(const Quaternion& rhs) const
{
    return *ring_ == *rhs.ring_ && c_ == rhs.c_;
}

Quaternion Quaternion::scaled(int64_t v) const
{
    uint64_t n = ring_->n();
    uint64_t vn = normalize(v, n);
    Quaternion out = *this;
    for (size_t idx = 0; idx < 4; ++idx) out.c_[idx] = mul_mod(c_[idx], vn, n);
    return out;
}

Quaternion Quaternion::conjugate() const
{
    uint64_t n = ring_->n();
    Quaternion out = *this;
    for (size_t idx = 1; idx < 4; ++idx) out.c_[idx] = sub_mod(0, c_[idx], n);
    return out;
}

modint::Residue Quaternion::norm() const
{
    // Scalar of z * conj(z): the k^2 = -ab relation makes the x3 term
    // enter with +ab (the form x0^2 - a x1^2 - b x2^2 + ab x3^2), which
    // is what multiplicativity requires.
    uint64_t n = ring_->n();
    uint64_t ab = mul_mod(ring_->a, ring_->b, n);
    uint64_t v = mul_mod(c_[0], c_[0], n);
    v = sub_mod(v, mul_mod(ring_->a, mul_mod(c_[1], c_[1], n), n), n);
    v = sub_mod(v, mul_mod(ring_->b, mul_mod(c_[2], c_[2], n), n), n);
    v = add_mod(v, mul_mod(ab, mul_mod(c_[3], c_[3], n), n), n);
    return modint::Residue(static_cast<int64_t>(v), n);
}

modint::Residue Quaternion::trace() const
{
    uint64_t n = ring_->n();
    return modint::Residue(static_cast<int64_t>(add_mod(c_[0], c_[0], n)), n);
}

std::optional<Quaternion> Quaternion::try_inverse() const
{
    uint64_t n = ring_->n();
    uint64_t nz = norm().value;
    auto inv = modint::try_inverse_mod(nz, n);
    if (!inv) return std::nullopt;
    return conjugate().scaled(static_cast<int64_t>(*inv));
}

bool Quaternion::is_unit() const
{
    return modint::gcd(norm().value, ring_->n()) == 1;
}

std::string Quaternion::to_string() const
{
    std::ostringstream out;
    out << c_[0] << " + " << c_[1] << "*i + " << c_[2] << "*j + " << c_[3] << "*k";
    return out.str();
}

uint64_t element_count(const RingParams& params) noexcept
{
    unsigned __int128 count = 1;
    for (int idx = 0; idx < 4; ++idx) count *= params.n();
    if (count > ~uint64_t(0)) return ~uint64_t(0);
    return static_cast<uint64_t>(count);
}

Quaternion element_at(const RingHandle& ring, uint64_t idx)
{
    uint64_t n = ring->n();
    std::array<int64_t, 4> coeffs{};
    for (size_t pos = 0; pos < 4; ++pos) {
        coeffs[pos] = static_cast<int64_t>(idx % n);
        idx /= n;
    }
    return Quaternion(ring, coeffs);
}

ElementRange::ElementRange(RingHandle ring, uint64_t budget) : ring_(std::move(ring))
{
    count_ = element_count(*ring_);
    if (count_ > budget) throw BudgetExceededError(count_, budget);
}

}  // namespace quatring::quat
