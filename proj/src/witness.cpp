#include "witness.hpp"

#include "congruence.hpp"

#include <json.hpp>

#include <stdexcept>

namespace quatring::witness {

using modint::gcd;
using modint::mul_mod;
using modint::normalize;
using modint::sub_mod;
using quat::Quaternion;
using quat::RingHandle;

using ordered_json = nlohmann::ordered_json;

const char* tag_name(Tag tag)
{
    return tag == Tag::Hamilton ? "HAMILTON" : "ELL";
}

CanonicalClass classify(uint64_t n, int64_t a, int64_t b)
{
    if (n < 2) throw std::domain_error("classify: modulus must be at least 2");
    uint64_t an = normalize(a, n);
    uint64_t bn = normalize(b, n);
    if (uint64_t g = gcd(an, n); g != 1) throw modint::NotAUnitError(an, n, g);
    if (uint64_t g = gcd(bn, n); g != 1) throw modint::NotAUnitError(bn, n, g);
    bool hamilton = normalize(a, 4) == 3 && normalize(b, 4) == 3;
    return CanonicalClass{hamilton ? Tag::Hamilton : Tag::Ell, n % 2 == 1, n % 4 != 0};
}

std::string classify_to_json(const CanonicalClass& cls)
{
    ordered_json j;
    j["tag"] = tag_name(cls.tag);
    j["split"] = cls.split;
    j["collapse"] = cls.collapse;
    return j.dump();
}

Quaternion apply_step(const ChainStep& step, const Quaternion& q)
{
    if (!(*q.ring() == *step.from))
        throw std::invalid_argument("apply_step: element does not live in the step's source ring");
    Quaternion img_k = step.img_i * step.img_j;
    Quaternion out = Quaternion::scalar(step.to, static_cast<int64_t>(q.coeff(0)));
    out = out + step.img_i.scaled(static_cast<int64_t>(q.coeff(1)));
    out = out + step.img_j.scaled(static_cast<int64_t>(q.coeff(2)));
    out = out + img_k.scaled(static_cast<int64_t>(q.coeff(3)));
    return out;
}

ChainStep compose(const ChainStep& first, const ChainStep& second)
{
    if (!(*first.to == *second.from))
        throw std::invalid_argument("compose: intermediate rings do not match");
    return ChainStep{first.from, second.to, apply_step(second, first.img_i),
                     apply_step(second, first.img_j), first.name + "," + second.name};
}

bool verify_step(const ChainStep& step)
{
    const Quaternion& fi = step.img_i;
    const Quaternion& fj = step.img_j;
    Quaternion fk = fi * fj;
    Quaternion a_img = Quaternion::scalar(step.to, static_cast<int64_t>(step.from->a));
    Quaternion b_img = Quaternion::scalar(step.to, static_cast<int64_t>(step.from->b));
    if (!(fi * fi == a_img)) return false;
    if (!(fj * fj == b_img)) return false;
    if (!((fi * fj) + (fj * fi) == Quaternion::zero(step.to))) return false;
    return matrep::is_invertible_mod_n(
        matrep::basis_matrix(Quaternion::one(step.to), fi, fj, fk), step.to->n());
}

namespace {

uint64_t two_power(uint32_t s)
{
    if (s < 1 || s > 30) throw std::domain_error("2-power exponent out of supported range");
    return uint64_t(1) << s;
}

}  // namespace

ChainStep rescale_step(uint32_t s, int64_t a, int64_t b, int64_t ap, int64_t bp)
{
    uint64_t n = two_power(s);
    if (normalize(a, 8) != normalize(ap, 8) || normalize(b, 8) != normalize(bp, 8))
        throw std::domain_error("rescale_step: requires a == a' and b == b' (mod 8)");
    uint64_t alpha = congruence::solve_scalar_square_2adic(ap, a, s);
    uint64_t beta = congruence::solve_scalar_square_2adic(bp, b, s);
    RingHandle from = quat::make_ring(n, ap, bp);
    RingHandle to = quat::make_ring(n, a, b);
    uint64_t alpha_inv = modint::inverse_mod(alpha, n);
    uint64_t beta_inv = modint::inverse_mod(beta, n);
    return ChainStep{from, to, Quaternion::unit_i(to).scaled(static_cast<int64_t>(alpha_inv)),
                     Quaternion::unit_j(to).scaled(static_cast<int64_t>(beta_inv)), "rescale"};
}

ChainStep swap_step(uint32_t s, int64_t a, int64_t b)
{
    uint64_t n = two_power(s);
    uint64_t an = normalize(a, n);
    uint64_t bn = normalize(b, n);
    uint64_t mab = sub_mod(0, mul_mod(an, bn, n), n);
    RingHandle from = quat::make_ring(n, static_cast<int64_t>(mab), static_cast<int64_t>(an));
    RingHandle to = quat::make_ring(n, static_cast<int64_t>(an), static_cast<int64_t>(bn));
    return ChainStep{from, to, Quaternion::unit_k(to), Quaternion::unit_i(to), "swap"};
}

ChainStep forward_swap_step(uint32_t s, int64_t a, int64_t b)
{
    uint64_t n = two_power(s);
    uint64_t an = normalize(a, n);
    uint64_t bn = normalize(b, n);
    uint64_t mab = sub_mod(0, mul_mod(an, bn, n), n);
    RingHandle from = quat::make_ring(n, static_cast<int64_t>(an), static_cast<int64_t>(bn));
    RingHandle to = quat::make_ring(n, static_cast<int64_t>(mab), static_cast<int64_t>(an));
    uint64_t a_inv = modint::inverse_mod(an, n);
    return ChainStep{from, to, Quaternion::unit_j(to),
                     Quaternion::unit_k(to).scaled(static_cast<int64_t>(a_inv)), "swap"};
}

ChainStep endpoint_one_beta(int64_t beta, uint32_t s)
{
    uint64_t n = two_power(s);
    int64_t eta, theta;
    switch (beta) {
        case -1: eta = 1; theta = 0; break;
        case 1: eta = 0; theta = 1; break;
        case 3: eta = 1; theta = 2; break;
        case 5: eta = 2; theta = 3; break;
        default:
            throw std::domain_error("endpoint_one_beta: beta must be one of {-1, 1, 3, 5}");
    }
    RingHandle from = quat::make_ring(n, 1, beta);
    RingHandle to = quat::make_ring(n, 1, 1);
    // i -> j, j -> theta*i - eta*k; (theta*i - eta*k)^2 = theta^2 - eta^2 = beta.
    Quaternion img_j = Quaternion::unit_i(to).scaled(theta) - Quaternion::unit_k(to).scaled(eta);
    return ChainStep{from, to, Quaternion::unit_j(to), img_j,
                     "endpoint_one_beta(" + std::to_string(beta) + ")"};
}

ChainStep endpoint_minus_one_five(uint32_t s)
{
    uint64_t n = two_power(s);
    RingHandle from = quat::make_ring(n, -1, 5);
    RingHandle to = quat::make_ring(n, -1, 1);
    Quaternion img_j = Quaternion::unit_j(to) + Quaternion::unit_k(to).scaled(2);
    return ChainStep{from, to, Quaternion::unit_i(to), img_j, "endpoint_minus_one_five"};
}

ChainStep endpoint_minus_one_three(uint32_t s)
{
    uint64_t n = two_power(s);
    ChainStep to_minus_five = rescale_step(s, -1, -5, -1, 3);
    RingHandle mid = quat::make_ring(n, -1, -5);
    RingHandle to = quat::make_ring(n, -1, -1);
    Quaternion img_j = Quaternion::unit_j(to) + Quaternion::unit_k(to).scaled(2);
    ChainStep into_h{mid, to, Quaternion::unit_i(to), img_j, "map"};
    ChainStep composed = compose(to_minus_five, into_h);
    composed.name = "endpoint_minus_one_three";
    return composed;
}

FactorWitness witness_odd_prime_power(uint64_t p, uint32_t s, int64_t a, int64_t b)
{
    if (!modint::is_prime(p) || p == 2)
        throw std::domain_error("witness_odd_prime_power: p must be an odd prime");
    unsigned __int128 pk128 = 1;
    for (uint32_t i = 0; i < s; ++i) pk128 *= p;
    if (s < 1 || pk128 >= (uint64_t(1) << 31))
        throw std::domain_error("witness_odd_prime_power: p^s out of supported range");
    uint64_t pk = static_cast<uint64_t>(pk128);
    uint64_t an = normalize(a, pk);
    uint64_t bn = normalize(b, pk);
    if (an % p == 0 || bn % p == 0)
        throw modint::NotAUnitError(an % p == 0 ? an : bn, pk, p);

    // b == u^2 - a v^2 (mod p^s)
    auto [u, v] = congruence::solve_binary_form_odd(1, -static_cast<int64_t>(an),
                                                    static_cast<int64_t>(bn), p, s);

    FactorWitness f;
    f.p = p;
    f.s = s;
    f.pk = pk;
    f.target = TargetKind::M2;
    f.mat_i = matrep::Mat2Z({{{0, static_cast<int64_t>(an)}, {1, 0}}}, pk);
    uint64_t mav = sub_mod(0, mul_mod(an, v, pk), pk);
    f.mat_j = matrep::Mat2Z({{{static_cast<int64_t>(u), static_cast<int64_t>(mav)},
                              {static_cast<int64_t>(v), -static_cast<int64_t>(u)}}},
                            pk);
    f.steps = {"norm_equation"};
    return f;
}

namespace {

enum class AtomKind { Swap, OneBeta, MinusOneFive, MinusOneThree };

struct Atom {
    AtomKind kind;
    int64_t beta = 0;
};

// Fixed decision table over (a mod 8, b mod 8), both odd. Every route ends
// at (1,1) or (-1,-1); a swap is followed by a rescale back to the
// representative set {1, 3, 5, -1} whenever the new first parameter left it.
std::vector<Atom> route_for(uint32_t a8, uint32_t b8)
{
    using K = AtomKind;
    switch (a8 * 10 + b8) {
        case 11: return {};
        case 13: return {{K::OneBeta, 3}};
        case 15: return {{K::OneBeta, 5}};
        case 17: return {{K::OneBeta, -1}};
        case 31: return {{K::Swap}, {K::Swap}, {K::OneBeta, 5}};
        case 33: return {{K::Swap}, {K::MinusOneThree}};
        case 35: return {{K::Swap}, {K::OneBeta, 3}};
        case 37: return {{K::Swap}, {K::Swap}, {K::MinusOneThree}};
        case 51: return {{K::Swap}, {K::Swap}, {K::OneBeta, 3}};
        case 53: return {{K::Swap}, {K::OneBeta, 5}};
        case 55: return {{K::Swap}, {K::MinusOneFive}, {K::Swap}, {K::OneBeta, -1}};
        case 57: return {{K::Swap}, {K::Swap}, {K::MinusOneFive}, {K::Swap}, {K::OneBeta, -1}};
        case 71: return {{K::Swap}, {K::OneBeta, -1}};
        case 73: return {{K::MinusOneThree}};
        case 75: return {{K::MinusOneFive}, {K::Swap}, {K::OneBeta, -1}};
        case 77: return {};
        default: throw std::logic_error("route_for: parameters are not odd residues");
    }
}

uint64_t rep8(uint64_t value, uint64_t n)
{
    switch (value & 7) {
        case 1: return 1;
        case 3: return 3 % n;
        case 5: return 5 % n;
        case 7: return n - 1;
        default: throw std::logic_error("rep8: even residue");
    }
}

}  // namespace

FactorWitness witness_two_power(uint32_t s, int64_t a, int64_t b)
{
    uint64_t n = two_power(s);
    uint64_t an = normalize(a, n);
    uint64_t bn = normalize(b, n);
    if (an % 2 == 0) throw modint::NotAUnitError(an, n, 2);
    if (bn % 2 == 0) throw modint::NotAUnitError(bn, n, 2);

    // The tag mirrors classify: for s == 1 the mod-4 classes are read off
    // the integer inputs (the two targets coincide there anyway).
    Tag tag;
    if (s == 1)
        tag = (normalize(a, 4) == 3 && normalize(b, 4) == 3) ? Tag::Hamilton : Tag::Ell;
    else
        tag = (an % 4 == 3 && bn % 4 == 3) ? Tag::Hamilton : Tag::Ell;

    std::vector<ChainStep> chain;
    uint64_t cur_a = an, cur_b = bn;

    auto push_rescale_to = [&](uint64_t ra, uint64_t rb) {
        if (cur_a == ra && cur_b == rb) return;
        chain.push_back(rescale_step(s, static_cast<int64_t>(ra), static_cast<int64_t>(rb),
                                     static_cast<int64_t>(cur_a), static_cast<int64_t>(cur_b)));
        cur_a = ra;
        cur_b = rb;
    };

    if (s >= 3) {
        push_rescale_to(rep8(an, n), rep8(bn, n));
        for (const Atom& atom : route_for(an & 7, bn & 7)) {
            switch (atom.kind) {
                case AtomKind::Swap: {
                    chain.push_back(forward_swap_step(s, static_cast<int64_t>(cur_a),
                                                      static_cast<int64_t>(cur_b)));
                    uint64_t next_a = sub_mod(0, mul_mod(cur_a, cur_b, n), n);
                    cur_b = cur_a;
                    cur_a = next_a;
                    push_rescale_to(rep8(cur_a, n), cur_b);
                    break;
                }
                case AtomKind::OneBeta: {
                    if (cur_a != 1 || cur_b != normalize(atom.beta, n))
                        throw std::logic_error("witness_two_power: route reached wrong endpoint");
                    chain.push_back(endpoint_one_beta(atom.beta, s));
                    cur_a = 1;
                    cur_b = 1;
                    break;
                }
                case AtomKind::MinusOneFive: {
                    if (cur_a != n - 1 || cur_b != 5 % n)
                        throw std::logic_error("witness_two_power: route reached wrong endpoint");
                    chain.push_back(endpoint_minus_one_five(s));
                    cur_b = 1;
                    break;
                }
                case AtomKind::MinusOneThree: {
                    if (cur_a != n - 1 || cur_b != 3 % n)
                        throw std::logic_error("witness_two_power: route reached wrong endpoint");
                    chain.push_back(endpoint_minus_one_three(s));
                    cur_b = n - 1;
                    break;
                }
            }
        }
    } else if (s == 2) {
        if (cur_a == 1 && cur_b == 3) {
            chain.push_back(endpoint_one_beta(3, s));
            cur_b = 1;
        } else if (cur_a == 3 && cur_b == 1) {
            chain.push_back(forward_swap_step(s, 3, 1));
            cur_a = 1;
            cur_b = 3;
            chain.push_back(endpoint_one_beta(3, s));
            cur_b = 1;
        }
        // (1,1) and (3,3) are already the canonical targets.
    }
    // s == 1: (1,1) is both targets at once.

    uint64_t want_a = tag == Tag::Hamilton ? n - 1 : 1 % n;
    if (cur_a != want_a || cur_b != want_a)
        throw std::logic_error("witness_two_power: route did not reach the canonical target");

    RingHandle target_ring = quat::make_ring(n, static_cast<int64_t>(want_a),
                                             static_cast<int64_t>(want_a));

    Quaternion img_i = Quaternion::unit_i(target_ring);
    Quaternion img_j = Quaternion::unit_j(target_ring);
    FactorWitness f;
    if (!chain.empty()) {
        for (const ChainStep& step : chain) {
            if (!verify_step(step))
                throw std::logic_error("witness_two_power: step failed verification: " + step.name);
            f.steps.push_back(step.name);
        }
        ChainStep composite = chain.front();
        for (size_t k = 1; k < chain.size(); ++k) composite = compose(composite, chain[k]);
        img_i = composite.img_i;
        img_j = composite.img_j;
    }

    f.p = 2;
    f.s = s;
    f.pk = n;
    f.target = tag == Tag::Hamilton ? TargetKind::H : TargetKind::L;
    f.target_a = want_a;
    f.target_b = want_a;
    f.phi_i = img_i.coeffs();
    f.phi_j = img_j.coeffs();
    return f;
}

IsoWitness build_witness(uint64_t n, int64_t a, int64_t b)
{
    classify(n, a, b);  // validates the inputs
    modint::Modulus m = modint::factorize(n);

    IsoWitness w;
    w.n = n;
    w.a = normalize(a, n);
    w.b = normalize(b, n);
    for (size_t k = 0; k < m.factors.size(); ++k) {
        auto [p, s] = m.factors[k];
        if (p == 2)
            w.factors.push_back(witness_two_power(s, a, b));
        else
            w.factors.push_back(witness_odd_prime_power(p, s, a, b));
    }

    VerifyReport rep = verify_witness(w);
    if (!rep.ok) throw std::logic_error("build_witness: emitted witness failed verification");
    return w;
}

namespace {

std::array<uint64_t, 4> flatten(const matrep::Mat2Z& m)
{
    return {m.e[0][0], m.e[0][1], m.e[1][0], m.e[1][1]};
}

}  // namespace

VerifyReport verify_witness(const IsoWitness& w)
{
    VerifyReport rep;
    rep.ok = true;
    auto fail = [&rep](uint64_t p, uint32_t s, const std::string& rel, const std::string& detail) {
        rep.ok = false;
        rep.failures.push_back(VerifyFailure{p, s, rel, detail});
    };

    if (w.n < 2) {
        fail(0, 0, "structure", "modulus must be at least 2");
        return rep;
    }
    if (gcd(w.a, w.n) != 1 || gcd(w.b, w.n) != 1) {
        fail(0, 0, "structure", "source parameters are not units");
        return rep;
    }
    if (w.factors.empty()) {
        fail(0, 0, "structure", "no factors");
        return rep;
    }

    unsigned __int128 prod = 1;
    uint64_t prev_p = 0;
    for (const FactorWitness& f : w.factors) {
        if (!modint::is_prime(f.p)) {
            fail(f.p, f.s, "structure", "factor base is not prime");
            return rep;
        }
        if (f.p <= prev_p) {
            fail(f.p, f.s, "structure", "factor primes must be strictly increasing");
            return rep;
        }
        prev_p = f.p;
        unsigned __int128 pk = 1;
        for (uint32_t i = 0; i < f.s; ++i) pk *= f.p;
        if (f.s < 1 || pk != f.pk) {
            fail(f.p, f.s, "structure", "stored p^s is inconsistent");
            return rep;
        }
        prod *= pk;
    }
    if (prod != w.n) {
        fail(0, 0, "structure", "factor moduli do not multiply to n");
        return rep;
    }

    for (const FactorWitness& f : w.factors) {
        uint64_t ar = w.a % f.pk;
        uint64_t br = w.b % f.pk;
        if (f.target == TargetKind::M2) {
            if (f.mat_i.n != f.pk || f.mat_j.n != f.pk) {
                fail(f.p, f.s, "structure", "matrix images carry the wrong modulus");
                continue;
            }
            const matrep::Mat2Z& A = f.mat_i;
            const matrep::Mat2Z& B = f.mat_j;
            matrep::Mat2Z AB = A * B;
            if (!(A * A == matrep::Mat2Z::scalar(static_cast<int64_t>(ar), f.pk)))
                fail(f.p, f.s, "phi_i_square", "phi(i)^2 != a");
            if (!(B * B == matrep::Mat2Z::scalar(static_cast<int64_t>(br), f.pk)))
                fail(f.p, f.s, "phi_j_square", "phi(j)^2 != b");
            if (!(AB == matrep::neg(B * A)))
                fail(f.p, f.s, "anticommute", "phi(i)phi(j) != -phi(j)phi(i)");
            matrep::Mat4 basis{};
            std::array<std::array<uint64_t, 4>, 4> cols = {
                flatten(matrep::Mat2Z::identity(f.pk)), flatten(A), flatten(B), flatten(AB)};
            for (int row = 0; row < 4; ++row)
                for (int col = 0; col < 4; ++col) basis[row][col] = cols[col][row];
            if (!matrep::is_invertible_mod_n(basis, f.pk))
                fail(f.p, f.s, "basis", "{I, A, B, AB} does not span M2");
        } else {
            uint64_t ta, tb;
            switch (f.target) {
                case TargetKind::H: ta = tb = f.pk - 1; break;
                case TargetKind::L: ta = tb = 1 % f.pk; break;
                default: ta = f.target_a; tb = f.target_b; break;
            }
            RingHandle ring;
            try {
                ring = quat::make_ring(f.pk, static_cast<int64_t>(ta), static_cast<int64_t>(tb));
            } catch (const std::exception& e) {
                fail(f.p, f.s, "structure", std::string("bad target ring: ") + e.what());
                continue;
            }
            auto as_quat = [&ring](const std::array<uint64_t, 4>& c) {
                return Quaternion(ring, {static_cast<int64_t>(c[0]), static_cast<int64_t>(c[1]),
                                         static_cast<int64_t>(c[2]), static_cast<int64_t>(c[3])});
            };
            Quaternion fi = as_quat(f.phi_i);
            Quaternion fj = as_quat(f.phi_j);
            Quaternion fk = fi * fj;
            if (!(fi * fi == Quaternion::scalar(ring, static_cast<int64_t>(ar))))
                fail(f.p, f.s, "phi_i_square", "phi(i)^2 != a");
            if (!(fj * fj == Quaternion::scalar(ring, static_cast<int64_t>(br))))
                fail(f.p, f.s, "phi_j_square", "phi(j)^2 != b");
            if (!((fi * fj) + (fj * fi) == Quaternion::zero(ring)))
                fail(f.p, f.s, "anticommute", "phi(i)phi(j) != -phi(j)phi(i)");
            if (!matrep::is_invertible_mod_n(
                    matrep::basis_matrix(Quaternion::one(ring), fi, fj, fk), f.pk))
                fail(f.p, f.s, "basis", "{1, phi(i), phi(j), phi(i)phi(j)} is not a basis");
        }
    }
    return rep;
}

std::string VerifyReport::to_json() const
{
    ordered_json j;
    j["ok"] = ok;
    ordered_json arr = ordered_json::array();
    for (const VerifyFailure& f : failures) {
        ordered_json jf;
        jf["p"] = f.p;
        jf["s"] = f.s;
        jf["relation"] = f.relation;
        jf["detail"] = f.detail;
        arr.push_back(jf);
    }
    j["failures"] = arr;
    return j.dump(2);
}

namespace {

const char* target_name(TargetKind kind)
{
    switch (kind) {
        case TargetKind::H: return "H";
        case TargetKind::L: return "L";
        case TargetKind::M2: return "M2";
        default: return "Q";
    }
}

ordered_json mat_to_json(const matrep::Mat2Z& m)
{
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < 2; ++r) rows.push_back({m.e[r][0], m.e[r][1]});
    return rows;
}

}  // namespace

std::string to_json(const IsoWitness& w)
{
    ordered_json root;
    root["source"] = ordered_json{{"n", w.n}, {"a", w.a}, {"b", w.b}};
    ordered_json factors = ordered_json::array();
    for (const FactorWitness& f : w.factors) {
        ordered_json jf;
        jf["p"] = f.p;
        jf["s"] = f.s;
        jf["target"] = target_name(f.target);
        if (f.target == TargetKind::Quat)
            jf["target_params"] = {f.target_a, f.target_b};
        if (f.target == TargetKind::M2) {
            jf["phi_i"] = mat_to_json(f.mat_i);
            jf["phi_j"] = mat_to_json(f.mat_j);
        } else {
            jf["phi_i"] = f.phi_i;
            jf["phi_j"] = f.phi_j;
        }
        jf["steps"] = f.steps;
        factors.push_back(jf);
    }
    root["factors"] = factors;
    return root.dump(2);
}

namespace {

uint64_t get_u64(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("witness: missing integer field '") + key + "'");
    int64_t v = j.at(key).get<int64_t>();
    if (v < 0) throw std::invalid_argument(std::string("witness: field '") + key + "' must be >= 0");
    return static_cast<uint64_t>(v);
}

int64_t get_i64(const nlohmann::json& j)
{
    if (!j.is_number_integer()) throw std::invalid_argument("witness: expected integer");
    return j.get<int64_t>();
}

std::array<uint64_t, 4> read_vec4(const nlohmann::json& j, uint64_t pk)
{
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("witness: quaternion image must be a 4-vector");
    std::array<uint64_t, 4> out{};
    for (size_t k = 0; k < 4; ++k) out[k] = normalize(get_i64(j[k]), pk);
    return out;
}

matrep::Mat2Z read_mat2(const nlohmann::json& j, uint64_t pk)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("witness: matrix image must be 2x2");
    std::array<std::array<int64_t, 2>, 2> entries{};
    for (size_t r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2)
            throw std::invalid_argument("witness: matrix image must be 2x2");
        for (size_t c = 0; c < 2; ++c) entries[r][c] = get_i64(j[r][c]);
    }
    return matrep::Mat2Z(entries, pk);
}

}  // namespace

IsoWitness witness_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("witness: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("source") || !j.contains("factors"))
        throw std::invalid_argument("witness: expected { source, factors }");

    const auto& src = j.at("source");
    IsoWitness w;
    w.n = get_u64(src, "n");
    if (w.n < 2) throw std::invalid_argument("witness: modulus must be at least 2");
    if (!src.contains("a") || !src.contains("b"))
        throw std::invalid_argument("witness: source must carry a and b");
    w.a = normalize(get_i64(src.at("a")), w.n);
    w.b = normalize(get_i64(src.at("b")), w.n);

    if (!j.at("factors").is_array())
        throw std::invalid_argument("witness: factors must be an array");
    for (const auto& jf : j.at("factors")) {
        FactorWitness f;
        f.p = get_u64(jf, "p");
        f.s = static_cast<uint32_t>(get_u64(jf, "s"));
        if (f.s < 1 || f.s > 62) throw std::invalid_argument("witness: factor exponent out of range");
        unsigned __int128 pk = 1;
        for (uint32_t i = 0; i < f.s; ++i) {
            pk *= f.p;
            if (pk > (uint64_t(1) << 62)) throw std::invalid_argument("witness: p^s too large");
        }
        f.pk = static_cast<uint64_t>(pk);

        std::string target = jf.value("target", std::string());
        if (target == "H")
            f.target = TargetKind::H;
        else if (target == "L")
            f.target = TargetKind::L;
        else if (target == "M2")
            f.target = TargetKind::M2;
        else if (target == "Q")
            f.target = TargetKind::Quat;
        else
            throw std::invalid_argument("witness: unknown target '" + target + "'");

        if (f.target == TargetKind::Quat) {
            if (!jf.contains("target_params"))
                throw std::invalid_argument("witness: target 'Q' requires target_params");
            const auto& tp = jf.at("target_params");
            if (!tp.is_array() || tp.size() != 2)
                throw std::invalid_argument("witness: target_params must be [a, b]");
            f.target_a = normalize(get_i64(tp[0]), f.pk);
            f.target_b = normalize(get_i64(tp[1]), f.pk);
        }

        if (!jf.contains("phi_i") || !jf.contains("phi_j"))
            throw std::invalid_argument("witness: factor must carry phi_i and phi_j");
        if (f.target == TargetKind::M2) {
            f.mat_i = read_mat2(jf.at("phi_i"), f.pk);
            f.mat_j = read_mat2(jf.at("phi_j"), f.pk);
        } else {
            f.phi_i = read_vec4(jf.at("phi_i"), f.pk);
            f.phi_j = read_vec4(jf.at("phi_j"), f.pk);
        }
        if (jf.contains("steps")) {
            if (!jf.at("steps").is_array())
                throw std::invalid_argument("witness: steps must be an array of names");
            for (const auto& sname : jf.at("steps")) {
                if (!sname.is_string())
                    throw std::invalid_argument("witness: steps must be an array of names");
                f.steps.push_back(sname.get<std::string>());
            }
        }
        w.factors.push_back(std::move(f));
    }
    return w;
}

}  // namespace quatring::witness
