#pragma once

// Matrix models for quaternion rings: Z/n[i]/(i^2+1) (Gaussian residues),
// 2x2 matrices over Z/n and over Gaussian residues, the embeddings of the
// Hamilton and (1,1) rings into 2x2 Gaussian matrices, and the 4x4
// change-of-basis utilities used to certify witnesses.

#include "quat.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace quatring::matrep {

/// re + im*i with i^2 = -1, components canonical mod n.
struct GaussRes {
    uint64_t re = 0;
    uint64_t im = 0;
    uint64_t n = 1;

    GaussRes() = default;
    GaussRes(int64_t re_in, int64_t im_in, uint64_t n_in)
        : re(modint::normalize(re_in, n_in)), im(modint::normalize(im_in, n_in)), n(n_in)
    {
    }

    static GaussRes zero(uint64_t n) { return GaussRes(0, 0, n); }
    static GaussRes one(uint64_t n) { return GaussRes(1, 0, n); }

    GaussRes conj() const { return GaussRes(static_cast<int64_t>(re), -static_cast<int64_t>(im), n); }

    friend bool operator==(const GaussRes& lhs, const GaussRes& rhs) = default;
};

GaussRes operator+(const GaussRes& x, const GaussRes& y);
GaussRes operator-(const GaussRes& x, const GaussRes& y);
GaussRes operator*(const GaussRes& x, const GaussRes& y);

/// 2x2 matrix over Z/n[i]/(i^2+1).
struct Mat2G {
    std::array<std::array<GaussRes, 2>, 2> e{};

    static Mat2G identity(uint64_t n);
    static Mat2G zero(uint64_t n);

    uint64_t n() const { return e[0][0].n; }

    friend bool operator==(const Mat2G& lhs, const Mat2G& rhs) = default;
};

Mat2G operator+(const Mat2G& x, const Mat2G& y);
Mat2G operator-(const Mat2G& x, const Mat2G& y);
Mat2G operator*(const Mat2G& x, const Mat2G& y);

/// 2x2 matrix over Z/n.
struct Mat2Z {
    std::array<std::array<uint64_t, 2>, 2> e{};
    uint64_t n = 1;

    Mat2Z() = default;
    Mat2Z(std::array<std::array<int64_t, 2>, 2> entries, uint64_t n_in);

    static Mat2Z identity(uint64_t n);
    static Mat2Z scalar(int64_t v, uint64_t n);

    friend bool operator==(const Mat2Z& lhs, const Mat2Z& rhs) = default;
};

Mat2Z operator+(const Mat2Z& x, const Mat2Z& y);
Mat2Z operator-(const Mat2Z& x, const Mat2Z& y);
Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
Mat2Z neg(const Mat2Z& x);

/// Embedding of the Hamilton ring (-1,-1 / Z/n) into 2x2 Gaussian
/// matrices: x0 + x1 i + x2 j + x3 k maps to
///   [[x0 - x1 i, -x2 + x3 i], [x2 + x3 i, x0 + x1 i]].
/// Requires params (-1, -1); additive and multiplicative homomorphism.
Mat2G embed_H(const quat::Quaternion& z);

/// Embedding of (1,1 / Z/n) into the block form
///   [[alpha - beta i, gamma + delta i], [gamma - delta i, alpha + beta i]]
/// via i -> [[0,1],[1,0]], j -> [[0,i],[-i,0]], k -> [[-i,0],[0,i]],
/// i.e. (alpha, beta, gamma, delta) = (x0, x3, x1, x2); this coefficient
/// assignment is the one that makes the block form a homomorphism.
/// Requires params (1, 1).
Mat2G embed_L(const quat::Quaternion& z);

using Mat4 = std::array<std::array<uint64_t, 4>, 4>;

/// 4x4 matrix whose columns are the coefficient vectors of g0..g3.
/// Invertibility mod n certifies that {g0, g1, g2, g3} is a basis.
Mat4 basis_matrix(const quat::Quaternion& g0, const quat::Quaternion& g1,
                  const quat::Quaternion& g2, const quat::Quaternion& g3);

/// Determinant mod n by exact cofactor expansion; no elimination, so
/// zero-divisors in Z/n never require division.
uint64_t det4_mod(const Mat4& m, uint64_t n);

/// gcd(det(m), n) == 1.
bool is_invertible_mod_n(const Mat4& m, uint64_t n);

std::string to_json_string(const Mat2Z& m);
std::string to_json_string(const Mat2G& m);  // Gaussian entries as [re, im]

}  // namespace quatring::matrep
