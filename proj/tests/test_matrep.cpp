#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matrep.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

using namespace quatring;
using matrep::GaussRes;
using matrep::Mat2G;
using matrep::Mat4;
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

TEST_CASE("Gaussian residue arithmetic: i^2 = -1")
{
    GaussRes i(0, 1, 5);
    CHECK(i * i == GaussRes(-1, 0, 5));
    GaussRes z(2, 3, 5);
    CHECK(z * z.conj() == GaussRes(2 * 2 + 3 * 3, 0, 5));
}

TEST_CASE("embed_H maps 1 to the identity and preserves i^2 = -1")
{
    RingHandle ring = quat::make_ring(5, -1, -1);
    CHECK(matrep::embed_H(Quaternion::one(ring)) == Mat2G::identity(5));
    Mat2G mi = matrep::embed_H(Quaternion::unit_i(ring));
    Mat2G minus_one = Mat2G::zero(5) - Mat2G::identity(5);
    CHECK(mi * mi == minus_one);
}

TEST_CASE("embed_H requires Hamilton parameters")
{
    RingHandle wrong = quat::make_ring(5, 1, 1);
    CHECK_THROWS_AS(matrep::embed_H(Quaternion::one(wrong)), std::domain_error);
    RingHandle right = quat::make_ring(5, -1, -1);
    CHECK_THROWS_AS(matrep::embed_L(Quaternion::one(right)), std::domain_error);
}

TEST_CASE("embed_H is multiplicative on random pairs mod 5")
{
    RingHandle ring = quat::make_ring(5, -1, -1);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Quaternion z = random_element(ring, rng);
        Quaternion w = random_element(ring, rng);
        CHECK(matrep::embed_H(z * w) == matrep::embed_H(z) * matrep::embed_H(w));
        CHECK(matrep::embed_H(z + w) == matrep::embed_H(z) + matrep::embed_H(w));
    }
}

TEST_CASE("embed_L maps 1 to the identity and preserves j^2 = 1")
{
    RingHandle ring = quat::make_ring(8, 1, 1);
    CHECK(matrep::embed_L(Quaternion::one(ring)) == Mat2G::identity(8));
    Mat2G mj = matrep::embed_L(Quaternion::unit_j(ring));
    CHECK(mj * mj == Mat2G::identity(8));
    Mat2G mi = matrep::embed_L(Quaternion::unit_i(ring));
    CHECK(mi * mi == Mat2G::identity(8));
}

TEST_CASE("embed_L is multiplicative on random pairs mod 8")
{
    RingHandle ring = quat::make_ring(8, 1, 1);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        Quaternion z = random_element(ring, rng);
        Quaternion w = random_element(ring, rng);
        CHECK(matrep::embed_L(z * w) == matrep::embed_L(z) * matrep::embed_L(w));
        CHECK(matrep::embed_L(z + w) == matrep::embed_L(z) + matrep::embed_L(w));
    }
}

TEST_CASE("both embeddings are injective homomorphisms, exhaustive at n = 3")
{
    {
        RingHandle ring = quat::make_ring(3, -1, -1);
        std::set<std::string> images;
        std::vector<Quaternion> all;
        for (const Quaternion& z : quat::ElementRange(ring)) all.push_back(z);
        for (const Quaternion& z : all) images.insert(matrep::to_json_string(matrep::embed_H(z)));
        CHECK(images.size() == 81);
        for (const Quaternion& z : all)
            for (const Quaternion& w : all)
                REQUIRE(matrep::embed_H(z * w) == matrep::embed_H(z) * matrep::embed_H(w));
    }
    {
        RingHandle ring = quat::make_ring(3, 1, 1);
        std::set<std::string> images;
        std::vector<Quaternion> all;
        for (const Quaternion& z : quat::ElementRange(ring)) all.push_back(z);
        for (const Quaternion& z : all) images.insert(matrep::to_json_string(matrep::embed_L(z)));
        CHECK(images.size() == 81);
        for (const Quaternion& z : all)
            for (const Quaternion& w : all)
                REQUIRE(matrep::embed_L(z * w) == matrep::embed_L(z) * matrep::embed_L(w));
    }
}

TEST_CASE("basis_matrix of the canonical basis is the identity")
{
    for (auto [n, a, b] :
         {std::tuple<uint64_t, int64_t, int64_t>{5, -1, -1}, {8, 3, 5}, {9, 2, 2}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        Mat4 m = matrep::basis_matrix(Quaternion::one(ring), Quaternion::unit_i(ring),
                                      Quaternion::unit_j(ring), Quaternion::unit_k(ring));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(m[r][c] == (r == c ? 1u : 0u));
        CHECK(matrep::det4_mod(m, n) == 1);
    }
}

TEST_CASE("basis_matrix example: (1, i, j+k, j-k) mod 3")
{
    RingHandle ring = quat::make_ring(3, -1, -1);
    Quaternion jk_plus(ring, {0, 0, 1, 1});
    Quaternion jk_minus(ring, {0, 0, 1, -1});
    Mat4 m = matrep::basis_matrix(Quaternion::one(ring), Quaternion::unit_i(ring), jk_plus,
                                  jk_minus);
    // det = -2 == 1 (mod 3)
    CHECK(matrep::det4_mod(m, 3) == 1);
    CHECK(matrep::is_invertible_mod_n(m, 3));
}

TEST_CASE("basis_matrix with a duplicate column is singular")
{
    RingHandle ring = quat::make_ring(5, -1, -1);
    Mat4 m = matrep::basis_matrix(Quaternion::one(ring), Quaternion::unit_i(ring),
                                  Quaternion::unit_j(ring), Quaternion::unit_j(ring));
    CHECK(!matrep::is_invertible_mod_n(m, 5));
}

TEST_CASE("is_invertible_mod_n on diagonal examples")
{
    Mat4 eye{};
    for (int d = 0; d < 4; ++d) eye[d][d] = 1;
    CHECK(matrep::is_invertible_mod_n(eye, 8));

    Mat4 diag = eye;
    diag[3][3] = 2;
    CHECK(!matrep::is_invertible_mod_n(diag, 8));
    CHECK(matrep::is_invertible_mod_n(diag, 9));
}

TEST_CASE("det4 matches an independent 3x3-minor expansion on random matrices")
{
    // Independent oracle: Leibniz sum over all 24 permutations, parity by
    // inversion count.
    auto leibniz = [](const Mat4& m, uint64_t n) {
        std::array<int, 4> sigma{0, 1, 2, 3};
        int64_t acc = 0;
        do {
            int inversions = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (sigma[i] > sigma[j]) ++inversions;
            int64_t term = inversions % 2 == 0 ? 1 : -1;
            for (int r = 0; r < 4; ++r) term *= static_cast<int64_t>(m[r][sigma[r]] % n);
            acc += term;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return modint::normalize(acc, n);
    };

    std::mt19937_64 rng(77);
    for (uint64_t n : {5ull, 8ull, 9ull, 12ull}) {
        for (int t = 0; t < 100; ++t) {
            Mat4 m{};
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m[r][c] = rng() % n;
            CHECK(matrep::det4_mod(m, n) == leibniz(m, n));
        }
    }
}

TEST_CASE("unimodular coefficient changes preserve invertibility")
{
    RingHandle ring = quat::make_ring(8, 3, 5);
    std::mt19937_64 rng(64);
    for (int t = 0; t < 100; ++t) {
        Quaternion g0 = Quaternion::one(ring);
        Quaternion g1 = random_element(ring, rng);
        Quaternion g2 = random_element(ring, rng);
        Quaternion g3 = random_element(ring, rng);
        Mat4 before = matrep::basis_matrix(g0, g1, g2, g3);
        bool inv_before = matrep::is_invertible_mod_n(before, 8);

        // elementary operation: add g3 to g2 (determinant-preserving)
        Mat4 after = matrep::basis_matrix(g0, g1, g2 + g3, g3);
        CHECK(matrep::is_invertible_mod_n(after, 8) == inv_before);

        // swap two columns (determinant negated, invertibility preserved)
        Mat4 swapped = matrep::basis_matrix(g0, g2, g1, g3);
        CHECK(matrep::is_invertible_mod_n(swapped, 8) == inv_before);
    }
}

TEST_CASE("matrix JSON forms")
{
    matrep::Mat2Z mz({{{1, 2}, {3, 4}}}, 5);
    CHECK(matrep::to_json_string(mz) == "[[1,2],[3,4]]");

    Mat2G mg = Mat2G::identity(5);
    CHECK(matrep::to_json_string(mg) == "[[[1,0],[0,0]],[[0,0],[1,0]]]");
}
