#pragma once

// Quaternion rings (a,b / Z/nZ): the free rank-4 module over Z/nZ with
// basis {1, i, j, k} and relations i^2 = a, j^2 = b, ij = -ji = k, for
// units a, b. Elements are immutable values carrying their ring; mixing
// elements of different rings throws instead of coercing.

#include "modint.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace quatring::quat {

/// Enumeration would exceed the configured element budget.
class BudgetExceededError : public std::length_error {
public:
    BudgetExceededError(uint64_t required, uint64_t budget);
    /// Number of elements (or pairs) the request would have to visit.
    uint64_t required() const noexcept { return required_; }
    uint64_t budget() const noexcept { return budget_; }

private:
    uint64_t required_;
    uint64_t budget_;
};

/// Names a quaternion ring (a,b / Z/nZ); a and b are validated units.
struct RingParams {
    modint::Modulus modulus;
    uint64_t a = 0;
    uint64_t b = 0;

    RingParams(modint::Modulus m, int64_t a_in, int64_t b_in);

    uint64_t n() const noexcept { return modulus.n; }

    friend bool operator==(const RingParams& lhs, const RingParams& rhs) noexcept
    {
        return lhs.modulus.n == rhs.modulus.n && lhs.a == rhs.a && lhs.b == rhs.b;
    }
};

using RingHandle = std::shared_ptr<const RingParams>;

RingHandle make_ring(uint64_t n, int64_t a, int64_t b);

/// Product in the basis {1, i, j, k}. The full table derived from
/// i^2 = a, j^2 = b, ij = -ji = k is
///   ik = aj, ki = -aj, jk = -bi, kj = bi, k^2 = -ab,
/// which expands to
///   r0 = x0*y0 + a*x1*y1 + b*x2*y2 - a*b*x3*y3
///   r1 = x0*y1 + x1*y0 - b*x2*y3 + b*x3*y2
///   r2 = x0*y2 + x2*y0 + a*x1*y3 - a*x3*y1
///   r3 = x0*y3 + x3*y0 + x1*y2 - x2*y1
void mul_coeffs(uint64_t n, uint64_t a, uint64_t b, const std::array<uint64_t, 4>& x,
                const std::array<uint64_t, 4>& y, std::array<uint64_t, 4>& out) noexcept;

class Quaternion {
public:
    Quaternion(RingHandle ring, std::array<int64_t, 4> coeffs);

    static Quaternion zero(const RingHandle& ring) { return Quaternion(ring, {0, 0, 0, 0}); }
    static Quaternion one(const RingHandle& ring) { return Quaternion(ring, {1, 0, 0, 0}); }
    static Quaternion scalar(const RingHandle& ring, int64_t v)
    {
        return Quaternion(ring, {v, 0, 0, 0});
    }
    static Quaternion unit_i(const RingHandle& ring) { return Quaternion(ring, {0, 1, 0, 0}); }
    static Quaternion unit_j(const RingHandle& ring) { return Quaternion(ring, {0, 0, 1, 0}); }
    static Quaternion unit_k(const RingHandle& ring) { return Quaternion(ring, {0, 0, 0, 1}); }

    const RingHandle& ring() const noexcept { return ring_; }
    const std::array<uint64_t, 4>& coeffs() const noexcept { return c_; }
    uint64_t coeff(size_t idx) const { return c_[idx]; }
    uint64_t n() const noexcept { return ring_->n(); }

    Quaternion operator+(const Quaternion& rhs) const;
    Quaternion operator-(const Quaternion& rhs) const;
    Quaternion operator-() const;
    Quaternion operator*(const Quaternion& rhs) const;
    bool operator==(const Quaternion& rhs) const;

    /// Multiply every coefficient by the scalar v mod n.
    Quaternion scaled(int64_t v) const;

    Quaternion conjugate() const;

    /// n(z) = z * conj(z) = x0^2 - a*x1^2 - b*x2^2 + a*b*x3^2, a scalar;
    /// multiplicative.
    modint::Residue norm() const;

    /// tr(z) = z + conj(z) = 2*x0.
    modint::Residue trace() const;

    /// z is a unit iff n(z) is a unit in Z/nZ; the inverse is then
    /// conj(z) * n(z)^{-1}. Returns nullopt when gcd(n(z), n) > 1.
    std::optional<Quaternion> try_inverse() const;

    bool is_unit() const;

    bool is_scalar() const noexcept { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    /// "x0 + x1*i + x2*j + x3*k" with canonical coefficients.
    std::string to_string() const;

private:
    void require_same_ring(const Quaternion& rhs) const;

    RingHandle ring_;
    std::array<uint64_t, 4> c_{};
};

constexpr uint64_t kDefaultElementBudget = 65536;  // n <= 16

/// n^4, saturating at UINT64_MAX.
uint64_t element_count(const RingParams& params) noexcept;

/// Element with index idx in the canonical enumeration order: coefficients
/// are the base-n digits of idx, x0 least significant. Scalars come first,
/// so the order starts 0, 1, ..., n-1, i, 1+i, ...
Quaternion element_at(const RingHandle& ring, uint64_t idx);

/// Streams all n^4 elements exactly once in the canonical order.
/// Refuses (BudgetExceededError) when n^4 exceeds the budget.
class ElementRange {
public:
    explicit ElementRange(RingHandle ring, uint64_t budget = kDefaultElementBudget);

    class iterator {
    public:
        using value_type = Quaternion;

        iterator(const RingHandle* ring, uint64_t idx) : ring_(ring), idx_(idx) {}
        Quaternion operator*() const { return element_at(*ring_, idx_); }
        iterator& operator++()
        {
            ++idx_;
            return *this;
        }
        bool operator!=(const iterator& rhs) const { return idx_ != rhs.idx_; }

    private:
        const RingHandle* ring_;
        uint64_t idx_;
    };

    iterator begin() const { return iterator(&ring_, 0); }
    iterator end() const { return iterator(&ring_, count_); }
    uint64_t size() const noexcept { return count_; }

private:
    RingHandle ring_;
    uint64_t count_;
};

}  // namespace quatring::quat
