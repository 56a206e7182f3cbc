#include "matrep.hpp"

#include <json.hpp>

#include <stdexcept>

namespace quatring::matrep {

using modint::add_mod;
using modint::mul_mod;
using modint::sub_mod;

namespace {

void require_same(uint64_t lhs, uint64_t rhs, const char* what)
{
    if (lhs != rhs) throw std::invalid_argument(std::string(what) + ": modulus mismatch");
}

}  // namespace

GaussRes operator+(const GaussRes& x, const GaussRes& y)
{
    require_same(x.n, y.n, "GaussRes");
    GaussRes out;
    out.n = x.n;
    out.re = add_mod(x.re, y.re, x.n);
    out.im = add_mod(x.im, y.im, x.n);
    return out;
}

GaussRes operator-(const GaussRes& x, const GaussRes& y)
{
    require_same(x.n, y.n, "GaussRes");
    GaussRes out;
    out.n = x.n;
    out.re = sub_mod(x.re, y.re, x.n);
    out.im = sub_mod(x.im, y.im, x.n);
    return out;
}

GaussRes operator*(const GaussRes& x, const GaussRes& y)
{
    require_same(x.n, y.n, "GaussRes");
    GaussRes out;
    out.n = x.n;
    out.re = sub_mod(mul_mod(x.re, y.re, x.n), mul_mod(x.im, y.im, x.n), x.n);
    out.im = add_mod(mul_mod(x.re, y.im, x.n), mul_mod(x.im, y.re, x.n), x.n);
    return out;
}

Mat2G Mat2G::identity(uint64_t n)
{
    Mat2G m = zero(n);
    m.e[0][0] = GaussRes::one(n);
    m.e[1][1] = GaussRes::one(n);
    return m;
}

Mat2G Mat2G::zero(uint64_t n)
{
    Mat2G m;
    for (auto& row : m.e)
        for (auto& v : row) v = GaussRes::zero(n);
    return m;
}

Mat2G operator+(const Mat2G& x, const Mat2G& y)
{
    Mat2G out = x;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.e[r][c] = x.e[r][c] + y.e[r][c];
    return out;
}

Mat2G operator-(const Mat2G& x, const Mat2G& y)
{
    Mat2G out = x;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.e[r][c] = x.e[r][c] - y.e[r][c];
    return out;
}

Mat2G operator*(const Mat2G& x, const Mat2G& y)
{
    Mat2G out = Mat2G::zero(x.n());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.e[r][c] = x.e[r][0] * y.e[0][c] + x.e[r][1] * y.e[1][c];
    return out;
}

Mat2Z::Mat2Z(std::array<std::array<int64_t, 2>, 2> entries, uint64_t n_in) : n(n_in)
{
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) e[r][c] = modint::normalize(entries[r][c], n);
}

Mat2Z Mat2Z::identity(uint64_t n)
{
    return Mat2Z({{{1, 0}, {0, 1}}}, n);
}

Mat2Z Mat2Z::scalar(int64_t v, uint64_t n)
{
    return Mat2Z({{{v, 0}, {0, v}}}, n);
}

Mat2Z operator+(const Mat2Z& x, const Mat2Z& y)
{
    require_same(x.n, y.n, "Mat2Z");
    Mat2Z out = x;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.e[r][c] = add_mod(x.e[r][c], y.e[r][c], x.n);
    return out;
}

Mat2Z operator-(const Mat2Z& x, const Mat2Z& y)
{
    require_same(x.n, y.n, "Mat2Z");
    Mat2Z out = x;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.e[r][c] = sub_mod(x.e[r][c], y.e[r][c], x.n);
    return out;
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y)
{
    require_same(x.n, y.n, "Mat2Z");
    Mat2Z out = x;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.e[r][c] = add_mod(mul_mod(x.e[r][0], y.e[0][c], x.n),
                                  mul_mod(x.e[r][1], y.e[1][c], x.n), x.n);
    return out;
}

Mat2Z neg(const Mat2Z& x)
{
    Mat2Z out = x;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.e[r][c] = sub_mod(0, x.e[r][c], x.n);
    return out;
}

Mat2G embed_H(const quat::Quaternion& z)
{
    uint64_t n = z.n();
    const auto& ring = *z.ring();
    if (ring.a != n - 1 || ring.b != n - 1)
        throw std::domain_error("embed_H: ring parameters must be (-1, -1)");
    const auto& c = z.coeffs();
    int64_t x0 = static_cast<int64_t>(c[0]);
    int64_t x1 = static_cast<int64_t>(c[1]);
    int64_t x2 = static_cast<int64_t>(c[2]);
    int64_t x3 = static_cast<int64_t>(c[3]);
    Mat2G m = Mat2G::zero(n);
    m.e[0][0] = GaussRes(x0, -x1, n);
    m.e[0][1] = GaussRes(-x2, x3, n);
    m.e[1][0] = GaussRes(x2, x3, n);
    m.e[1][1] = GaussRes(x0, x1, n);
    return m;
}

Mat2G embed_L(const quat::Quaternion& z)
{
    uint64_t n = z.n();
    const auto& ring = *z.ring();
    if (ring.a != 1 % n || ring.b != 1 % n)
        throw std::domain_error("embed_L: ring parameters must be (1, 1)");
    const auto& c = z.coeffs();
    int64_t x0 = static_cast<int64_t>(c[0]);
    int64_t x1 = static_cast<int64_t>(c[1]);
    int64_t x2 = static_cast<int64_t>(c[2]);
    int64_t x3 = static_cast<int64_t>(c[3]);
    // (alpha, beta, gamma, delta) = (x0, x3, x1, x2)
    Mat2G m = Mat2G::zero(n);
    m.e[0][0] = GaussRes(x0, -x3, n);
    m.e[0][1] = GaussRes(x1, x2, n);
    m.e[1][0] = GaussRes(x1, -x2, n);
    m.e[1][1] = GaussRes(x0, x3, n);
    return m;
}

Mat4 basis_matrix(const quat::Quaternion& g0, const quat::Quaternion& g1,
                  const quat::Quaternion& g2, const quat::Quaternion& g3)
{
    if (!(*g0.ring() == *g1.ring()) || !(*g0.ring() == *g2.ring()) || !(*g0.ring() == *g3.ring()))
        throw std::invalid_argument("basis_matrix: ring mismatch");
    Mat4 m{};
    const quat::Quaternion* gs[4] = {&g0, &g1, &g2, &g3};
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) m[row][col] = gs[col]->coeff(row);
    return m;
}

namespace {

uint64_t det3_mod(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2, uint64_t n)
{
    uint64_t t0 = mul_mod(m[r0][c0],
                          sub_mod(mul_mod(m[r1][c1], m[r2][c2], n), mul_mod(m[r1][c2], m[r2][c1], n), n),
                          n);
    uint64_t t1 = mul_mod(m[r0][c1],
                          sub_mod(mul_mod(m[r1][c0], m[r2][c2], n), mul_mod(m[r1][c2], m[r2][c0], n), n),
                          n);
    uint64_t t2 = mul_mod(m[r0][c2],
                          sub_mod(mul_mod(m[r1][c0], m[r2][c1], n), mul_mod(m[r1][c1], m[r2][c0], n), n),
                          n);
    return add_mod(sub_mod(t0, t1, n), t2, n);
}

}  // namespace

uint64_t det4_mod(const Mat4& m, uint64_t n)
{
    uint64_t acc = 0;
    int sign = 1;
    for (int col = 0; col < 4; ++col) {
        int c[3];
        int idx = 0;
        for (int k = 0; k < 4; ++k)
            if (k != col) c[idx++] = k;
        uint64_t minor = det3_mod(m, 1, 2, 3, c[0], c[1], c[2], n);
        uint64_t term = mul_mod(m[0][col], minor, n);
        acc = sign > 0 ? add_mod(acc, term, n) : sub_mod(acc, term, n);
        sign = -sign;
    }
    return acc;
}

bool is_invertible_mod_n(const Mat4& m, uint64_t n)
{
    return modint::gcd(det4_mod(m, n), n) == 1;
}

std::string to_json_string(const Mat2Z& m)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int r = 0; r < 2; ++r) j.push_back({m.e[r][0], m.e[r][1]});
    return j.dump();
}

std::string to_json_string(const Mat2G& m)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int r = 0; r < 2; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < 2; ++c) row.push_back({m.e[r][c].re, m.e[r][c].im});
        j.push_back(row);
    }
    return j.dump();
}

}  // namespace quatring::matrep
