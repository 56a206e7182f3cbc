#pragma once

// Quadratic congruence solvers backing the isomorphism constructions:
// a two-variable Hensel lift, binary quadratic forms modulo odd prime
// powers, and the 2-adic special cases (scalar squares and sums of two
// squares). All solvers are deterministic: where a choice exists they
// return the lexicographically smallest canonical answer the algorithm
// reaches, so downstream witnesses are reproducible.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace quatring::congruence {

/// A congruence has no solution (or the hypothesis guaranteeing one fails).
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Both partial derivatives vanish mod p at the lift point.
class NonSmoothPointError : public std::domain_error {
public:
    explicit NonSmoothPointError(const std::string& what) : std::domain_error(what) {}
};

/// f(X,Y) = xx*X^2 + yy*Y^2 + xy*X*Y + x*X + y*Y + c with integer
/// coefficients. Total degree <= 2 is all the constructions need.
struct BivariateQuadratic {
    int64_t xx = 0;
    int64_t yy = 0;
    int64_t xy = 0;
    int64_t x = 0;
    int64_t y = 0;
    int64_t c = 0;
};

/// One Hensel step: given f(point) == 0 (mod p^j) with at least one partial
/// derivative nonzero mod p at point, returns (a1 + t1*p^j, a2 + t2*p^j)
/// with f == 0 (mod p^{j+1}). The offsets solve the linear congruence
/// t1*df/dx + t2*df/dy == -f(point)/p^j (mod p); when df/dx is a unit the
/// step fixes t2 = 0, otherwise t1 = 0, so the output is deterministic.
/// The point is reduced mod p^{j+1} on entry and the result is canonical
/// mod p^{j+1}; it always reduces to the input mod p^j.
///
/// Throws NonSmoothPointError if both partials vanish mod p, and
/// std::domain_error if f(point) != 0 (mod p^j) or p is not prime.
std::pair<uint64_t, uint64_t> lift_step(const BivariateQuadratic& f, uint64_t p, uint32_t j,
                                        std::pair<int64_t, int64_t> point);

/// Smallest (x, y) in x-major order with a*x^2 + b*y^2 == c (mod p),
/// p an odd prime not dividing a or b. A solution exists for every c.
/// Meet-in-the-middle: tabulate the smallest y per value of b*y^2, then
/// scan x upward; O(p) time and space.
std::pair<uint64_t, uint64_t> solve_binary_form_mod_p(int64_t a, int64_t b, int64_t c, uint64_t p);

/// (x, y) with a*x^2 + b*y^2 == c (mod p^s) for odd prime p and
/// gcd(abc, p) = 1: base solution mod p followed by s-1 lift steps.
/// Lifting is always possible because c being a unit forces one of the
/// base coordinates to be a unit.
std::pair<uint64_t, uint64_t> solve_binary_form_odd(int64_t a, int64_t b, int64_t c, uint64_t p,
                                                    uint32_t s);

/// Smallest x with a*x^2 == b (mod 2^s) for odd a, b with a == b (mod 8).
/// For s >= 3 this reduces to the square root of the unit b*a^{-1} == 1
/// (mod 8), lifted one bit at a time; s <= 2 is settled by direct
/// inspection. Throws NoSolutionError when a != b (mod 8).
uint64_t solve_scalar_square_2adic(int64_t a, int64_t b, uint32_t s);

/// Smallest (x, y) in x-major order with x^2 + y^2 == c (mod 2^s), c odd.
/// Breadth-first lifting: keep every solution mod 2^t (seeded by
/// exhaustive search mod 8) and extend each coordinate by {0, 2^t},
/// keeping survivors mod 2^{t+1}. Throws NoSolutionError when the
/// congruence has no solution at the requested s.
std::pair<uint64_t, uint64_t> solve_sum_two_squares_2adic(int64_t c, uint32_t s);

/// The inverse of 5 mod 2^s. With c equal to this value the sum-of-two-
/// squares congruence above is solvable for every s >= 1.
uint64_t inverse_of_five(uint32_t s);

/// Parsed "A x^2 + B y^2 = C". Missing terms parse as coefficient 0.
struct BinaryForm {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
};

/// Accepts e.g. "x^2 + y^2 = -1", "5x^2+5y^2=1", "3 x^2 = 5".
/// Throws std::invalid_argument on malformed input.
BinaryForm parse_binary_form(const std::string& text);

struct PrimePower {
    uint64_t p = 0;
    uint32_t s = 0;
    uint64_t value = 0;
};

/// Accepts "p^s" or a plain integer that must be a prime power.
PrimePower parse_prime_power(const std::string& text);

}  // namespace quatring::congruence
