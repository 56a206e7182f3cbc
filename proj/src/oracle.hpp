#pragma once

// Brute-force ground truth at small moduli: exhaustive invariant censuses,
// pruned generator-pair search between quaternion rings (existence of a
// valid pair is equivalent to existence of a ring isomorphism: a unital
// isomorphism fixes Z/n and sends i, j to anticommuting roots of a, b
// forming a basis; conversely such a pair induces a bijective
// homomorphism), local-ring checks, and exhaustive cross-validation of
// the congruence solvers.

#include "quat.hpp"
#include "witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quatring::oracle {

constexpr uint64_t kDefaultElementBudget = 65536;  // full enumeration: n <= 16

/// Pair search enumerates roots in a ring of at most this many elements
/// (n <= 8 by default; the pruned pair space is then at most n^8).
constexpr uint64_t pair_search_element_cap(uint64_t element_budget)
{
    return element_budget / 16;
}

struct InvariantFingerprint {
    uint64_t n = 0, a = 0, b = 0;
    uint64_t unit_count = 0;
    uint64_t involution_count = 0;   // z^2 == 1
    uint64_t square_zero_count = 0;  // z^2 == 0
    uint64_t idempotent_count = 0;   // z^2 == z
    uint64_t center_size = 0;

    bool same_counts(const InvariantFingerprint& rhs) const
    {
        return unit_count == rhs.unit_count && involution_count == rhs.involution_count
               && square_zero_count == rhs.square_zero_count
               && idempotent_count == rhs.idempotent_count && center_size == rhs.center_size;
    }
};

std::string to_json(const InvariantFingerprint& fp);

/// Exact counts by full enumeration of all n^4 elements.
InvariantFingerprint census(const quat::RingHandle& ring,
                            uint64_t element_budget = kDefaultElementBudget);

struct PairSearch {
    /// The lexicographically smallest valid pair (by element index), if any.
    std::optional<std::pair<quat::Quaternion, quat::Quaternion>> pair;
    /// CRT-structured witness built from the pair (generic quaternion target).
    std::optional<witness::IsoWitness> witness;
    uint64_t roots_of_a = 0;
    uint64_t roots_of_b = 0;
    uint64_t pairs_checked = 0;
    /// Size of the pruned search space that was exhausted (roots_a * roots_b).
    uint64_t search_space = 0;

    bool exhausted() const { return !pair.has_value(); }
};

/// Search `target` for (I, J) with I^2 = source.a, J^2 = source.b,
/// IJ = -JI and {1, I, J, IJ} a basis. Pruning: enumerate roots of a,
/// then roots of b filtered by anticommutation. Exhaustion of the pruned
/// space proves no isomorphism exists. Results are cached per
/// (n, source, target). Throws BudgetExceededError when n^4 exceeds
/// pair_search_element_cap(element_budget).
PairSearch find_generator_pair(const quat::RingHandle& source, const quat::RingHandle& target,
                               uint64_t element_budget = kDefaultElementBudget);

/// True iff for every element z, z or 1-z is a unit (unit test via the
/// norm criterion).
bool check_local(const quat::RingHandle& ring, uint64_t element_budget = kDefaultElementBudget);

struct CrosscheckGroup {
    std::string suite;
    uint64_t p = 0;
    uint32_t s = 0;
    uint64_t checked = 0;
    uint64_t mismatches = 0;
    std::vector<std::string> examples;  // first few mismatching tuples
};

struct CrosscheckReport {
    std::vector<CrosscheckGroup> groups;
    uint64_t total_checked = 0;
    uint64_t total_mismatches = 0;

    /// JSON lines: one record per checked group, then a summary record.
    std::string to_jsonl() const;

    void append(CrosscheckReport other);
};

/// Validate solve_binary_form_odd against direct evaluation for every
/// unit triple (a, b, c) mod p^s, for all p in {3, 5, 7} and p^s <=
/// max_modulus. jobs = 0 uses one worker per hardware thread.
CrosscheckReport crosscheck_binary_form_odd(uint64_t max_modulus = 2187, unsigned jobs = 0);

/// Validate solve_scalar_square_2adic for all odd a, b < 2^s with
/// a == b (mod 8), s <= max_s.
CrosscheckReport crosscheck_scalar_square(uint32_t max_s = 10);

/// Validate solve_sum_two_squares_2adic at c = inverse_of_five(s)
/// for s <= max_s (a solution is guaranteed there for every s).
CrosscheckReport crosscheck_sum_two_squares(uint32_t max_s = 12);

CrosscheckReport crosscheck_all(uint64_t binary_max_modulus = 2187, uint32_t scalar_max_s = 10,
                                uint32_t sum_max_s = 12, unsigned jobs = 0);

}  // namespace quatring::oracle
