#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congruence.hpp"
#include "oracle.hpp"

#include <array>
#include <thread>
#include <tuple>
#include <vector>

using namespace quatring;
using quat::Quaternion;
using quat::RingHandle;

TEST_CASE("census: the Hamilton ring mod 4 has 32 involutions, the (1,1) ring 64")
{
    oracle::InvariantFingerprint h = oracle::census(quat::make_ring(4, -1, -1));
    CHECK(h.involution_count == 32);
    oracle::InvariantFingerprint l = oracle::census(quat::make_ring(4, 1, 1));
    CHECK(l.involution_count == 64);
    CHECK(!h.same_counts(l));
}

TEST_CASE("census: mod 2 the two canonical rings have identical fingerprints")
{
    oracle::InvariantFingerprint h = oracle::census(quat::make_ring(2, -1, -1));
    oracle::InvariantFingerprint l = oracle::census(quat::make_ring(2, 1, 1));
    CHECK(h.same_counts(l));
}

TEST_CASE("census sanity: involutions include +-1, counts bounded by n^4")
{
    for (auto [n, a, b] :
         {std::tuple<uint64_t, int64_t, int64_t>{3, -1, -1}, {4, 1, 3}, {5, 2, 3}, {8, 3, 5}}) {
        oracle::InvariantFingerprint fp = oracle::census(quat::make_ring(n, a, b));
        uint64_t total = n * n * n * n;
        CHECK(fp.involution_count >= (n > 2 ? 2u : 1u));
        CHECK(fp.unit_count <= total);
        CHECK(fp.involution_count <= total);
        CHECK(fp.square_zero_count <= total);
        CHECK(fp.idempotent_count <= total);
        CHECK(fp.center_size >= n);  // scalars are central
        CHECK(fp.idempotent_count >= 2);  // 0 and 1
    }
}

TEST_CASE("census center sizes match hand derivations")
{
    // Center of the split ring M2(Z/p) is the scalars: p elements.
    CHECK(oracle::census(quat::make_ring(3, -1, -1)).center_size == 3);
    CHECK(oracle::census(quat::make_ring(5, -1, -1)).center_size == 5);
    // Mod 4, commuting with i and j forces x1, x2, x3 in {0, 2}: 4 * 2^3.
    CHECK(oracle::census(quat::make_ring(4, -1, -1)).center_size == 32);
    CHECK(oracle::census(quat::make_ring(4, 1, 1)).center_size == 32);
}

TEST_CASE("local rings have exactly the trivial idempotents, split rings more")
{
    for (uint64_t n : {2ull, 4ull, 8ull}) {
        CHECK(oracle::census(quat::make_ring(n, -1, -1)).idempotent_count == 2);
        CHECK(oracle::census(quat::make_ring(n, 1, 1)).idempotent_count == 2);
    }
    CHECK(oracle::census(quat::make_ring(3, -1, -1)).idempotent_count > 2);
    CHECK(oracle::census(quat::make_ring(5, 1, 1)).idempotent_count > 2);
}

TEST_CASE("census respects the element budget")
{
    CHECK_THROWS_AS(oracle::census(quat::make_ring(17, 1, 1)), quat::BudgetExceededError);
    CHECK_NOTHROW(oracle::census(quat::make_ring(16, 1, 1)));
}

TEST_CASE("find_generator_pair: H(Z/4) and L(Z/4) are not isomorphic (both directions)")
{
    RingHandle h = quat::make_ring(4, -1, -1);
    RingHandle l = quat::make_ring(4, 1, 1);
    oracle::PairSearch hl = oracle::find_generator_pair(h, l);
    CHECK(hl.exhausted());
    CHECK(hl.pairs_checked == hl.search_space);
    oracle::PairSearch lh = oracle::find_generator_pair(l, h);
    CHECK(lh.exhausted());
}

TEST_CASE("find_generator_pair: (3,3 / Z/8) embeds in H(Z/8)")
{
    RingHandle src = quat::make_ring(8, 3, 3);
    RingHandle tgt = quat::make_ring(8, -1, -1);
    oracle::PairSearch found = oracle::find_generator_pair(src, tgt);
    REQUIRE(!found.exhausted());
    REQUIRE(found.witness.has_value());
    CHECK(witness::verify_witness(*found.witness).ok);
    // classify predicts HAMILTON for (3,3)
    CHECK(witness::classify(8, 3, 3).tag == witness::Tag::Hamilton);
}

TEST_CASE("find_generator_pair: identity pair for H(Z/3) into itself")
{
    RingHandle h = quat::make_ring(3, -1, -1);
    oracle::PairSearch found = oracle::find_generator_pair(h, h);
    REQUIRE(!found.exhausted());
    CHECK(found.pair->first == Quaternion::unit_i(h));
    CHECK(found.pair->second == Quaternion::unit_j(h));
}

TEST_CASE("find_generator_pair respects the pair budget")
{
    RingHandle big = quat::make_ring(9, 2, 2);  // 9^4 = 6561 > 65536/16
    CHECK_THROWS_AS(oracle::find_generator_pair(big, big), quat::BudgetExceededError);
    // raising the budget admits it
    CHECK_NOTHROW(oracle::find_generator_pair(big, big, 16 * 6561));
}

TEST_CASE("fingerprints are isomorphism invariants at n = 4 and n = 8")
{
    for (uint64_t n : {4ull, 8ull}) {
        std::vector<std::pair<int64_t, int64_t>> params;
        for (int64_t a = 1; a < static_cast<int64_t>(n); a += 2)
            for (int64_t b = 1; b < static_cast<int64_t>(n); b += 2) params.emplace_back(a, b);
        for (auto [sa, sb] : params) {
            RingHandle src = quat::make_ring(n, sa, sb);
            oracle::InvariantFingerprint src_fp = oracle::census(src);
            for (auto [ta, tb] : params) {
                RingHandle tgt = quat::make_ring(n, ta, tb);
                oracle::PairSearch r = oracle::find_generator_pair(src, tgt);
                if (!r.exhausted()) {
                    oracle::InvariantFingerprint tgt_fp = oracle::census(tgt);
                    CHECK(src_fp.same_counts(tgt_fp));
                }
            }
        }
    }
}

TEST_CASE("classification concordance at n in {2,3,4,5}")
{
    for (uint64_t n : {2ull, 3ull, 4ull, 5ull}) {
        for (int64_t a = 1; a < static_cast<int64_t>(n); ++a) {
            if (modint::gcd(static_cast<uint64_t>(a), n) != 1) continue;
            for (int64_t b = 1; b < static_cast<int64_t>(n); ++b) {
                if (modint::gcd(static_cast<uint64_t>(b), n) != 1) continue;
                RingHandle src = quat::make_ring(n, a, b);
                witness::CanonicalClass cls = witness::classify(n, a, b);
                RingHandle predicted =
                    cls.tag == witness::Tag::Hamilton ? quat::make_ring(n, -1, -1)
                                                      : quat::make_ring(n, 1, 1);
                oracle::PairSearch hit = oracle::find_generator_pair(src, predicted);
                CHECK(!hit.exhausted());
                if (n % 4 == 0) {
                    RingHandle opposite =
                        cls.tag == witness::Tag::Hamilton ? quat::make_ring(n, 1, 1)
                                                          : quat::make_ring(n, -1, -1);
                    oracle::PairSearch miss = oracle::find_generator_pair(src, opposite);
                    CHECK(miss.exhausted());
                }
            }
        }
    }
}

TEST_CASE("check_local: 2-power rings are local, split rings are not")
{
    CHECK(oracle::check_local(quat::make_ring(8, -1, -1)));
    CHECK(oracle::check_local(quat::make_ring(8, 1, 1)));
    CHECK(oracle::check_local(quat::make_ring(2, 1, 1)));
    CHECK(oracle::check_local(quat::make_ring(4, -1, -1)));
    CHECK(oracle::check_local(quat::make_ring(4, 1, 1)));
    CHECK(!oracle::check_local(quat::make_ring(3, -1, -1)));
    CHECK(!oracle::check_local(quat::make_ring(5, 1, 1)));
    CHECK(!oracle::check_local(quat::make_ring(7, 2, 3)));
}

TEST_CASE("check_local agrees with inverse search at n <= 4")
{
    for (auto [n, a, b] :
         {std::tuple<uint64_t, int64_t, int64_t>{2, 1, 1}, {3, -1, -1}, {4, -1, -1}, {4, 1, 1}}) {
        RingHandle ring = quat::make_ring(n, a, b);
        quat::ElementRange range(ring);
        Quaternion one = Quaternion::one(ring);
        auto unit_by_search = [&](const Quaternion& z) {
            for (const Quaternion& w : range)
                if (z * w == one && w * z == one) return true;
            return false;
        };
        bool local_by_search = true;
        for (const Quaternion& z : range)
            local_by_search = local_by_search && (unit_by_search(z) || unit_by_search(one - z));
        CHECK(oracle::check_local(ring) == local_by_search);
    }
}

TEST_CASE("crosscheck: small binary-form sweep has zero mismatches")
{
    oracle::CrosscheckReport report = oracle::crosscheck_binary_form_odd(27, 2);
    CHECK(report.total_mismatches == 0);
    CHECK(report.total_checked > 0);
    // groups 3, 9, 27, 5, 25, 7 — all p^s <= 27
    CHECK(report.groups.size() == 6);
    uint64_t expected = 0;
    for (auto ps : {std::pair<uint64_t, uint64_t>{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
        uint64_t pk = 1;
        for (uint64_t i = 0; i < ps.second; ++i) pk *= ps.first;
        uint64_t phi = pk - pk / ps.first;
        expected += phi * phi * phi;
    }
    CHECK(report.total_checked == expected);
}

TEST_CASE("crosscheck: scalar and sum-of-squares suites are clean")
{
    oracle::CrosscheckReport scalar = oracle::crosscheck_scalar_square(6);
    CHECK(scalar.total_mismatches == 0);
    oracle::CrosscheckReport sums = oracle::crosscheck_sum_two_squares(8);
    CHECK(sums.total_mismatches == 0);
    CHECK(sums.total_checked == 8);
}

TEST_CASE("concurrent callers share the caches safely and agree")
{
    auto work = []() {
        for (int round = 0; round < 5; ++round) {
            for (int64_t a : {1, 3, 5, 7}) {
                witness::IsoWitness w = witness::build_witness(8, a, 7);
                if (!witness::verify_witness(w).ok) return false;
                oracle::PairSearch r = oracle::find_generator_pair(
                    quat::make_ring(8, a, 7),
                    quat::make_ring(8, witness::classify(8, a, 7).tag == witness::Tag::Hamilton
                                           ? -1
                                           : 1,
                                    witness::classify(8, a, 7).tag == witness::Tag::Hamilton
                                        ? -1
                                        : 1));
                if (r.exhausted()) return false;
                int64_t ap = a % 7 == 0 ? 2 : a;  // keep the form coefficient a unit mod 7
                auto [x, y] = congruence::solve_binary_form_odd(ap, 2, 5, 7, 3);
                if ((static_cast<uint64_t>(ap) * (x * x) + 2 * (y * y)) % 343 != 5)
                    return false;
            }
        }
        return true;
    };
    std::vector<std::thread> pool;
    std::array<bool, 4> ok{};
    for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { ok[t] = work(); });
    for (auto& th : pool) th.join();
    for (bool good : ok) CHECK(good);
}

TEST_CASE("crosscheck report serializes as JSON lines with a summary")
{
    oracle::CrosscheckReport sums = oracle::crosscheck_sum_two_squares(3);
    std::string jsonl = sums.to_jsonl();
    CHECK(jsonl.find("\"suite\":\"sum-squares-2adic\"") != std::string::npos);
    CHECK(jsonl.find("\"summary\":true") != std::string::npos);
    size_t lines = 0;
    for (char c : jsonl)
        if (c == '\n') ++lines;
    CHECK(lines == sums.groups.size() + 1);
}
