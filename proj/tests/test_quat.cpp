#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quat.hpp"

#include <array>
#include <random>
#include <set>
#include <tuple>

using namespace quatring;
using quat::Quaternion;
using quat::RingHandle;

namespace {

Quaternion random_element(const RingHandle& ring, std::mt19937_64& rng)
{
    uint64_t n = ring->n();
    return Quaternion(ring, {static_cast<int64_t>(rng() % n), static_cast<int64_t>(rng() % n),
                             static_cast<int64_t>(rng() % n), static_cast<int64_t>(rng() % n)});
}

}  // namespace

TEST_CASE("ring construction validates units")
{
    CHECK_NOTHROW(quat::make_ring(8, 3, 5));
    CHECK_NOTHROW(quat::make_ring(5, -1, -1));
    CHECK_THROWS_AS(quat::make_ring(8, 2, 3), modint::NotAUnitError);
    CHECK_THROWS_AS(quat::make_ring(9, 1, 3), modint::NotAUnitError);
    CHECK_THROWS_AS(quat::make_ring(1, 1, 1), std::domain_error);
}

TEST_CASE("generator relations: ij = k, ji = -k")
{
    for (auto [n, a, b] : {std::tuple<uint64_t, int64_t, int64_t>{5, -1, -1},
                           {8, 3, 5},
                           {7, 2, 3},
                           {9, 4, 7}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        Quaternion i = Quaternion::unit_i(ring);
        Quaternion j = Quaternion::unit_j(ring);
        Quaternion k = Quaternion::unit_k(ring);
        CHECK(i * j == k);
        CHECK(j * i == -k);
        CHECK(i * i == Quaternion::scalar(ring, a));
        CHECK(j * j == Quaternion::scalar(ring, b));
        // derived table rows
        CHECK(i * k == Quaternion::unit_j(ring).scaled(a));
        CHECK(k * i == -Quaternion::unit_j(ring).scaled(a));
        CHECK(j * k == -Quaternion::unit_i(ring).scaled(b));
        CHECK(k * j == Quaternion::unit_i(ring).scaled(b));
        CHECK(k * k == Quaternion::scalar(ring, -(a * b)));
    }
}

TEST_CASE("k squared in the Hamilton ring mod 5")
{
    RingHandle ring = quat::make_ring(5, -1, -1);
    Quaternion k = Quaternion::unit_k(ring);
    CHECK(k * k == Quaternion::scalar(ring, -1));
}

TEST_CASE("multiplicative identity")
{
    RingHandle ring = quat::make_ring(9, 2, 5);
    std::mt19937_64 rng(11);
    Quaternion one = Quaternion::one(ring);
    for (int t = 0; t < 50; ++t) {
        Quaternion z = random_element(ring, rng);
        CHECK(one * z == z);
        CHECK(z * one == z);
    }
}

TEST_CASE("cross-ring operations fail loudly")
{
    RingHandle r1 = quat::make_ring(5, -1, -1);
    RingHandle r2 = quat::make_ring(5, 1, 1);
    CHECK_THROWS_AS(Quaternion::unit_i(r1) * Quaternion::unit_i(r2), std::invalid_argument);
    CHECK_THROWS_AS(Quaternion::unit_i(r1) + Quaternion::unit_i(r2), std::invalid_argument);
}

TEST_CASE("conjugation")
{
    RingHandle ring = quat::make_ring(7, -1, -1);
    CHECK(Quaternion::scalar(ring, 3).conjugate() == Quaternion::scalar(ring, 3));
    Quaternion z(ring, {1, 1, 1, 1});
    CHECK(z.conjugate() == Quaternion(ring, {1, -1, -1, -1}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Quaternion w = random_element(ring, rng);
        CHECK(w.conjugate().conjugate() == w);
    }
}

TEST_CASE("norm examples")
{
    RingHandle ring = quat::make_ring(7, -1, -1);
    Quaternion z(ring, {1, 1, 1, 1});
    CHECK(z.norm().value == 4);
    CHECK(Quaternion::one(ring).norm().value == 1);
}

TEST_CASE("trace examples")
{
    RingHandle r7 = quat::make_ring(7, -1, -1);
    CHECK(Quaternion(r7, {0, 1, 1, 0}).trace().value == 0);
    RingHandle r8 = quat::make_ring(8, 3, 3);
    CHECK(Quaternion(r8, {3, 0, 0, 0}).trace().value == 6);
    RingHandle r4 = quat::make_ring(4, -1, -1);
    CHECK(Quaternion(r4, {1, 0, 0, 1}).trace().value == 2);
}

TEST_CASE("try_inverse examples")
{
    RingHandle r5 = quat::make_ring(5, -1, -1);
    Quaternion i = Quaternion::unit_i(r5);
    auto inv = i.try_inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == -i);
    CHECK(i * *inv == Quaternion::one(r5));

    RingHandle r4 = quat::make_ring(4, -1, -1);
    Quaternion z4(r4, {1, 1, 0, 0});
    CHECK(z4.norm().value == 2);
    CHECK(!z4.try_inverse().has_value());
    CHECK(modint::gcd(z4.norm().value, 4) == 2);

    Quaternion z5(r5, {1, 1, 0, 0});
    CHECK(z5.norm().value == 2);
    auto inv5 = z5.try_inverse();
    REQUIRE(inv5.has_value());
    CHECK(*inv5 == Quaternion(r5, {1, -1, 0, 0}).scaled(3));
    CHECK(z5 * *inv5 == Quaternion::one(r5));
    CHECK(*inv5 * z5 == Quaternion::one(r5));
}

TEST_CASE("enumeration counts and budget")
{
    CHECK(quat::ElementRange(quat::make_ring(2, 1, 1)).size() == 16);
    CHECK(quat::ElementRange(quat::make_ring(4, 1, 1)).size() == 256);
    CHECK(quat::ElementRange(quat::make_ring(8, 1, 1)).size() == 4096);

    try {
        quat::ElementRange range(quat::make_ring(17, 1, 1));  // 17^4 = 83521 > 65536
        FAIL("expected BudgetExceededError");
    } catch (const quat::BudgetExceededError& e) {
        CHECK(e.required() == 83521);
    }
}

TEST_CASE("enumeration yields each element exactly once, scalars first")
{
    RingHandle ring = quat::make_ring(3, -1, -1);
    quat::ElementRange range(ring);
    uint64_t count = 0;
    std::set<std::array<uint64_t, 4>> seen;
    for (const Quaternion& z : range) {
        if (count < 3) CHECK(z == Quaternion::scalar(ring, static_cast<int64_t>(count)));
        if (count == 3) CHECK(z == Quaternion::unit_i(ring));
        seen.insert(z.coeffs());
        ++count;
    }
    CHECK(count == 81);
    CHECK(seen.size() == 81);
}

TEST_CASE("associativity across rings (randomized)")
{
    std::mt19937_64 rng(123);
    for (auto [n, a, b] : {std::tuple<uint64_t, int64_t, int64_t>{4, -1, -1},
                           {8, 3, 5},
                           {9, 2, 2},
                           {15, 7, 11},
                           {16, 5, 7}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        for (int t = 0; t < 300; ++t) {
            Quaternion z = random_element(ring, rng);
            Quaternion w = random_element(ring, rng);
            Quaternion v = random_element(ring, rng);
            CHECK((z * w) * v == z * (w * v));
        }
    }
}

TEST_CASE("conjugation is an anti-automorphism (randomized)")
{
    std::mt19937_64 rng(321);
    for (auto [n, a, b] :
         {std::tuple<uint64_t, int64_t, int64_t>{8, 3, 5}, {9, 2, 2}, {15, 7, 11}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        for (int t = 0; t < 300; ++t) {
            Quaternion z = random_element(ring, rng);
            Quaternion w = random_element(ring, rng);
            CHECK((z * w).conjugate() == w.conjugate() * z.conjugate());
        }
    }
}

TEST_CASE("norm is multiplicative: exhaustive at n <= 4")
{
    for (auto [n, a, b] : {std::tuple<uint64_t, int64_t, int64_t>{2, 1, 1},
                           {3, -1, -1},
                           {4, -1, -1},
                           {4, 1, 3}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        quat::ElementRange range(ring);
        for (const Quaternion& z : range) {
            for (const Quaternion& w : range) {
                CHECK((z * w).norm().value
                      == modint::mul_mod(z.norm().value, w.norm().value, n));
            }
        }
    }
}

TEST_CASE("norm is multiplicative mod 9 (randomized)")
{
    std::mt19937_64 rng(9);
    RingHandle ring = quat::make_ring(9, -1, -1);
    for (int t = 0; t < 500; ++t) {
        Quaternion z = random_element(ring, rng);
        Quaternion w = random_element(ring, rng);
        CHECK((z * w).norm().value == modint::mul_mod(z.norm().value, w.norm().value, 9));
    }
}

TEST_CASE("trace is additive")
{
    std::mt19937_64 rng(17);
    RingHandle ring = quat::make_ring(15, 2, 7);
    for (int t = 0; t < 200; ++t) {
        Quaternion z = random_element(ring, rng);
        Quaternion w = random_element(ring, rng);
        CHECK((z + w).trace().value
              == modint::add_mod(z.trace().value, w.trace().value, 15));
    }
}

TEST_CASE("z * conj(z) is scalar and equals the norm (exhaustive n <= 4)")
{
    for (auto [n, a, b] :
         {std::tuple<uint64_t, int64_t, int64_t>{2, 1, 1}, {3, 2, 2}, {4, 3, 1}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        for (const Quaternion& z : quat::ElementRange(ring)) {
            Quaternion zz = z * z.conjugate();
            CHECK(zz.is_scalar());
            CHECK(zz.coeff(0) == z.norm().value);
        }
    }
}

TEST_CASE("unit criterion matches inverse search (exhaustive n <= 4)")
{
    for (auto [n, a, b] :
         {std::tuple<uint64_t, int64_t, int64_t>{2, 1, 1}, {3, -1, -1}, {4, -1, -1}, {4, 1, 1}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        quat::ElementRange range(ring);
        Quaternion one = Quaternion::one(ring);
        for (const Quaternion& z : range) {
            bool has_two_sided_inverse = false;
            for (const Quaternion& w : range) {
                if (z * w == one && w * z == one) {
                    has_two_sided_inverse = true;
                    break;
                }
            }
            CHECK(z.is_unit() == has_two_sided_inverse);
            auto inv = z.try_inverse();
            CHECK(inv.has_value() == has_two_sided_inverse);
            if (inv) {
                CHECK(z * *inv == one);
                CHECK(*inv * z == one);
            }
        }
    }
}

TEST_CASE("element text format")
{
    RingHandle ring = quat::make_ring(8, 3, 5);
    CHECK(Quaternion(ring, {1, 2, 0, 7}).to_string() == "1 + 2*i + 0*j + 7*k");
    CHECK(Quaternion(ring, {-1, 0, 0, 0}).to_string() == "7 + 0*i + 0*j + 0*k");
}
