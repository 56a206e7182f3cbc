#pragma once

// The structure engine: decide the isomorphism class of (a,b / Z/nZ) and
// construct a machine-checkable isomorphism witness to the canonical
// target. Witnesses are CRT-structured: one entry per prime-power factor
// of n, each holding images of the generators i, j in that factor's
// canonical target (a quaternion ring for 2-power factors, the 2x2 matrix
// ring for odd ones) plus the trace of composition steps that produced
// them. verify_witness re-checks the defining relations and the basis
// property from scratch.

#include "matrep.hpp"
#include "quat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quatring::witness {

enum class Tag { Hamilton, Ell };

const char* tag_name(Tag tag);  // "HAMILTON" / "ELL"

struct CanonicalClass {
    Tag tag;
    bool split;     // isomorphic to M2(Z/n) iff n odd
    bool collapse;  // the two tags name isomorphic rings iff n != 0 (mod 4)
};

/// HAMILTON iff a == b == -1 (mod 4), evaluated on the integer inputs
/// (when 4 | n this agrees with the residues mod n); split iff n odd;
/// collapse iff n != 0 (mod 4). Throws for n < 2 or non-unit a, b.
CanonicalClass classify(uint64_t n, int64_t a, int64_t b);

std::string classify_to_json(const CanonicalClass& cls);

enum class TargetKind { H, L, M2, Quat };

/// Witness component for one prime-power factor p^s of n.
struct FactorWitness {
    uint64_t p = 0;
    uint32_t s = 0;
    uint64_t pk = 0;  // p^s
    TargetKind target = TargetKind::L;

    // Quaternion targets (H, L, Quat): images as coefficient 4-vectors in
    // the target ring; target params are (pk-1, pk-1) for H, (1, 1) for L,
    // explicit for Quat.
    uint64_t target_a = 0;
    uint64_t target_b = 0;
    std::array<uint64_t, 4> phi_i{};
    std::array<uint64_t, 4> phi_j{};

    // Matrix targets (M2).
    matrep::Mat2Z mat_i{};
    matrep::Mat2Z mat_j{};

    std::vector<std::string> steps;
};

struct IsoWitness {
    uint64_t n = 0;
    uint64_t a = 0;  // canonical mod n
    uint64_t b = 0;
    std::vector<FactorWitness> factors;
};

/// One constructive isomorphism step: images of the `from` ring's
/// generators inside the `to` ring. Chains compose by linear extension.
struct ChainStep {
    quat::RingHandle from;
    quat::RingHandle to;
    quat::Quaternion img_i;
    quat::Quaternion img_j;
    std::string name;
};

/// Evaluate the linear extension of a step at q (a `from`-ring element):
/// q0 + q1*img_i + q2*img_j + q3*img_i*img_j.
quat::Quaternion apply_step(const ChainStep& step, const quat::Quaternion& q);

ChainStep compose(const ChainStep& first, const ChainStep& second);

/// Relations + basis certificate for a single step: img_i^2 = from.a,
/// img_j^2 = from.b, img_i img_j = -img_j img_i, and {1, img_i, img_j,
/// img_i img_j} has invertible coefficient matrix.
bool verify_step(const ChainStep& step);

/// Generator rescaling across mod-8 classes (mod 2^s): the step maps
/// (a',b') into (a,b) via i' = alpha^{-1} i, j' = beta^{-1} j, where
/// alpha solves a' x^2 == a and beta solves b' y^2 == b (mod 2^s).
/// Requires a == a' and b == b' (mod 8).
ChainStep rescale_step(uint32_t s, int64_t a, int64_t b, int64_t ap, int64_t bp);

/// The swap isomorphism (a,b) ~ (-ab, a), realized as images of the
/// (-ab, a)-generators inside (a,b): i' -> k, j' -> i (so k' -> -a j).
ChainStep swap_step(uint32_t s, int64_t a, int64_t b);

/// The same isomorphism oriented source-to-target, as build chains need:
/// images of the (a,b)-generators inside (-ab, a): i -> j', j -> a^{-1} k'.
ChainStep forward_swap_step(uint32_t s, int64_t a, int64_t b);

/// Endpoint (1, beta / Z/2^s) -> (1, 1 / Z/2^s) for beta in {-1,1,3,5},
/// using the exact integer pairs (eta, theta) with -eta^2 + theta^2 = beta:
/// -1 -> (1,0), 1 -> (0,1), 3 -> (1,2), 5 -> (2,3). Images: i -> j,
/// j -> theta*i - eta*k. Under embed_L these are the matrices
/// [[0,i],[-i,0]] and [[eta*i, theta],[theta, -eta*i]].
ChainStep endpoint_one_beta(int64_t beta, uint32_t s);

/// Endpoint (-1, 5 / Z/2^s) -> (-1, 1 / Z/2^s): i -> i, j -> j + 2k
/// ((j + 2k)^2 = 1 + 4 = 5 there, an exact integer identity).
ChainStep endpoint_minus_one_five(uint32_t s);

/// Endpoint (-1, 3 / Z/2^s) -> (-1, -1 / Z/2^s): rescale (-1,3) to
/// (-1,-5) (3 == -5 mod 8) composed with i -> i, j -> j + 2k, whose
/// square in the Hamilton ring is -(1 + 4) = -5 exactly.
ChainStep endpoint_minus_one_three(uint32_t s);

/// Split witness for odd p: solve b == u^2 - a v^2 (mod p^s) and emit
/// A = [[0,a],[1,0]], B = [[u,-av],[v,-u]]; then A^2 = aI, B^2 = bI,
/// AB = -BA and {I,A,B,AB} spans M2(Z/p^s).
FactorWitness witness_odd_prime_power(uint64_t p, uint32_t s, int64_t a, int64_t b);

/// 2-power factor: route (a,b) through the fixed decision table over
/// (a mod 8, b mod 8) — rescale, swaps, endpoint — to the canonical H or
/// L target. Exposed for tests; build_witness drives it.
FactorWitness witness_two_power(uint32_t s, int64_t a, int64_t b);

/// Factorize n and emit one verified FactorWitness per prime power.
IsoWitness build_witness(uint64_t n, int64_t a, int64_t b);

struct VerifyFailure {
    uint64_t p = 0;
    uint32_t s = 0;
    std::string relation;  // "phi_i_square" | "phi_j_square" | "anticommute" | "basis" | "structure"
    std::string detail;
};

struct VerifyReport {
    bool ok = false;
    std::vector<VerifyFailure> failures;

    std::string to_json() const;
};

VerifyReport verify_witness(const IsoWitness& w);

/// Schema: { source: {n,a,b}, factors: [ { p, s, target: "H"|"L"|"M2",
/// phi_i: [...], phi_j: [...], steps: [names] } ] }. Images are
/// coefficient 4-vectors for quaternion targets and 2x2 integer matrices
/// for matrix targets.
std::string to_json(const IsoWitness& w);

/// Parse + shape-validate a witness document. Throws std::invalid_argument.
IsoWitness witness_from_json(const std::string& text);

}  // namespace quatring::witness
