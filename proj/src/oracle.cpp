#include "oracle.hpp"

#include "barrett.hpp"
#include "congruence.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace quatring::oracle {

using modint::gcd;
using quat::Quaternion;
using quat::RingHandle;

using ordered_json = nlohmann::ordered_json;

std::string to_json(const InvariantFingerprint& fp)
{
    ordered_json j;
    j["n"] = fp.n;
    j["a"] = fp.a;
    j["b"] = fp.b;
    j["unit_count"] = fp.unit_count;
    j["involution_count"] = fp.involution_count;
    j["square_zero_count"] = fp.square_zero_count;
    j["idempotent_count"] = fp.idempotent_count;
    j["center_size"] = fp.center_size;
    return j.dump();
}

InvariantFingerprint census(const RingHandle& ring, uint64_t element_budget)
{
    quat::ElementRange range(ring, element_budget);
    uint64_t n = ring->n();

    InvariantFingerprint fp;
    fp.n = n;
    fp.a = ring->a;
    fp.b = ring->b;

    Quaternion one = Quaternion::one(ring);
    Quaternion zero = Quaternion::zero(ring);
    Quaternion qi = Quaternion::unit_i(ring);
    Quaternion qj = Quaternion::unit_j(ring);

    for (const Quaternion& z : range) {
        Quaternion zz = z * z;
        if (zz == one) ++fp.involution_count;
        if (zz == zero) ++fp.square_zero_count;
        if (zz == z) ++fp.idempotent_count;
        if (gcd(z.norm().value, n) == 1) ++fp.unit_count;
        // Commuting with the generators i and j is enough for centrality.
        if (z * qi == qi * z && z * qj == qj * z) ++fp.center_size;
    }
    return fp;
}

namespace {

std::vector<uint64_t> roots_of(const RingHandle& ring, uint64_t value)
{
    std::vector<uint64_t> out;
    Quaternion want = Quaternion::scalar(ring, static_cast<int64_t>(value));
    uint64_t count = quat::element_count(*ring);
    for (uint64_t idx = 0; idx < count; ++idx) {
        Quaternion z = quat::element_at(ring, idx);
        if (z * z == want) out.push_back(idx);
    }
    return out;
}

struct PairCacheEntry {
    std::optional<std::pair<uint64_t, uint64_t>> found;
    uint64_t roots_of_a = 0;
    uint64_t roots_of_b = 0;
    uint64_t pairs_checked = 0;
};

witness::IsoWitness pair_to_witness(const RingHandle& source, const RingHandle& target,
                                    const Quaternion& gi, const Quaternion& gj)
{
    // Reduce the pair mod each prime power of n; relations and the basis
    // certificate survive componentwise.
    witness::IsoWitness w;
    w.n = source->n();
    w.a = source->a;
    w.b = source->b;
    const modint::Modulus& m = source->modulus;
    for (size_t k = 0; k < m.factors.size(); ++k) {
        uint64_t pk = m.prime_power(k);
        witness::FactorWitness f;
        f.p = m.factors[k].first;
        f.s = m.factors[k].second;
        f.pk = pk;
        f.target = witness::TargetKind::Quat;
        f.target_a = target->a % pk;
        f.target_b = target->b % pk;
        for (size_t c = 0; c < 4; ++c) {
            f.phi_i[c] = gi.coeff(c) % pk;
            f.phi_j[c] = gj.coeff(c) % pk;
        }
        f.steps = {"generator_search"};
        w.factors.push_back(std::move(f));
    }
    return w;
}

}  // namespace

PairSearch find_generator_pair(const RingHandle& source, const RingHandle& target,
                               uint64_t element_budget)
{
    if (source->n() != target->n())
        throw std::invalid_argument("find_generator_pair: source and target moduli differ");
    uint64_t count = quat::element_count(*target);
    uint64_t cap = pair_search_element_cap(element_budget);
    if (count > cap)
        throw quat::BudgetExceededError(
            count >= (uint64_t(1) << 32) ? ~uint64_t(0) : count * count, cap * cap);

    static std::mutex cache_mutex;
    static std::map<std::array<uint64_t, 5>, PairCacheEntry> cache;
    std::array<uint64_t, 5> key{source->n(), source->a, source->b, target->a, target->b};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            PairSearch out;
            out.roots_of_a = it->second.roots_of_a;
            out.roots_of_b = it->second.roots_of_b;
            out.pairs_checked = it->second.pairs_checked;
            out.search_space = it->second.roots_of_a * it->second.roots_of_b;
            if (it->second.found) {
                Quaternion gi = quat::element_at(target, it->second.found->first);
                Quaternion gj = quat::element_at(target, it->second.found->second);
                out.witness = pair_to_witness(source, target, gi, gj);
                out.pair = std::make_pair(gi, gj);
            }
            return out;
        }
    }

    std::vector<uint64_t> roots_a = roots_of(target, source->a);
    std::vector<uint64_t> roots_b =
        source->a == source->b ? roots_a : roots_of(target, source->b);

    PairSearch out;
    out.roots_of_a = roots_a.size();
    out.roots_of_b = roots_b.size();
    out.search_space = out.roots_of_a * out.roots_of_b;

    Quaternion zero = Quaternion::zero(target);
    for (uint64_t ia : roots_a) {
        Quaternion gi = quat::element_at(target, ia);
        for (uint64_t jb : roots_b) {
            Quaternion gj = quat::element_at(target, jb);
            ++out.pairs_checked;
            if (!((gi * gj) + (gj * gi) == zero)) continue;
            if (!matrep::is_invertible_mod_n(
                    matrep::basis_matrix(Quaternion::one(target), gi, gj, gi * gj), target->n()))
                continue;
            out.pair = std::make_pair(gi, gj);
            out.witness = pair_to_witness(source, target, gi, gj);
            break;
        }
        if (out.pair) break;
    }

    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        PairCacheEntry entry;
        entry.roots_of_a = out.roots_of_a;
        entry.roots_of_b = out.roots_of_b;
        entry.pairs_checked = out.pairs_checked;
        if (out.pair)
            entry.found = std::make_pair(
                // Recover indices from coefficients: index = sum c_k n^k.
                [&] {
                    uint64_t idx = 0, mul = 1;
                    for (size_t c = 0; c < 4; ++c, mul *= target->n())
                        idx += out.pair->first.coeff(c) * mul;
                    return idx;
                }(),
                [&] {
                    uint64_t idx = 0, mul = 1;
                    for (size_t c = 0; c < 4; ++c, mul *= target->n())
                        idx += out.pair->second.coeff(c) * mul;
                    return idx;
                }());
        cache.emplace(key, std::move(entry));
    }
    return out;
}

bool check_local(const RingHandle& ring, uint64_t element_budget)
{
    quat::ElementRange range(ring, element_budget);
    uint64_t n = ring->n();
    Quaternion one = Quaternion::one(ring);
    for (const Quaternion& z : range) {
        if (gcd(z.norm().value, n) == 1) continue;
        if (gcd((one - z).norm().value, n) != 1) return false;
    }
    return true;
}

void CrosscheckReport::append(CrosscheckReport other)
{
    for (auto& g : other.groups) groups.push_back(std::move(g));
    total_checked += other.total_checked;
    total_mismatches += other.total_mismatches;
}

std::string CrosscheckReport::to_jsonl() const
{
    std::string out;
    for (const CrosscheckGroup& g : groups) {
        ordered_json j;
        j["suite"] = g.suite;
        j["p"] = g.p;
        j["s"] = g.s;
        j["checked"] = g.checked;
        j["mismatches"] = g.mismatches;
        if (!g.examples.empty()) j["examples"] = g.examples;
        out += j.dump();
        out += '\n';
    }
    ordered_json summary;
    summary["summary"] = true;
    summary["checked"] = total_checked;
    summary["mismatches"] = total_mismatches;
    out += summary.dump();
    out += '\n';
    return out;
}

namespace {

constexpr size_t kMaxExamples = 5;

struct WorkerTally {
    uint64_t checked = 0;
    uint64_t mismatches = 0;
    std::vector<std::string> examples;

    void mismatch(const std::string& what)
    {
        ++mismatches;
        if (examples.size() < kMaxExamples) examples.push_back(what);
    }
};

// One (p, s) group of the binary-form sweep: every unit triple (a, b, c)
// mod p^s, solver output validated by direct evaluation.
CrosscheckGroup sweep_binary_group(uint64_t p, uint32_t s, uint64_t pk, unsigned jobs)
{
    std::vector<uint64_t> units;
    units.reserve(pk - pk / p);
    for (uint64_t u = 1; u < pk; ++u)
        if (u % p != 0) units.push_back(u);

    unsigned workers = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(units.size()));

    std::vector<WorkerTally> tallies(workers);
    detail::Barrett bar(pk);
    // Products a*x^2 fit a word without intermediate reduction iff pk^3 does.
    const bool small = pk < (uint64_t(1) << 21);
    auto run = [&](unsigned w) {
        // Accumulate locally; the shared tallies would otherwise bounce a
        // cache line between the workers on every tuple.
        WorkerTally tally;
        for (size_t ai = w; ai < units.size(); ai += workers) {
            uint64_t a = units[ai];
            for (uint64_t b : units) {
                for (uint64_t c : units) {
                    ++tally.checked;
                    try {
                        auto [x, y] = congruence::solve_binary_form_odd(
                            static_cast<int64_t>(a), static_cast<int64_t>(b),
                            static_cast<int64_t>(c), p, s);
                        uint64_t lhs =
                            small ? bar.reduce(a * (x * x) + b * (y * y))
                                  : bar.reduce(a * bar.reduce(x * x) + b * bar.reduce(y * y));
                        if (lhs != c)
                            tally.mismatch("binary-odd p=" + std::to_string(p) + " s="
                                           + std::to_string(s) + " a=" + std::to_string(a) + " b="
                                           + std::to_string(b) + " c=" + std::to_string(c)
                                           + " -> invalid (" + std::to_string(x) + ","
                                           + std::to_string(y) + ")");
                    } catch (const std::exception& e) {
                        tally.mismatch("binary-odd p=" + std::to_string(p) + " s="
                                       + std::to_string(s) + " a=" + std::to_string(a) + " b="
                                       + std::to_string(b) + " c=" + std::to_string(c)
                                       + " -> threw: " + e.what());
                    }
                }
            }
        }
        tallies[w] = std::move(tally);
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();

    CrosscheckGroup g;
    g.suite = "binary-odd";
    g.p = p;
    g.s = s;
    for (const WorkerTally& tally : tallies) {
        g.checked += tally.checked;
        g.mismatches += tally.mismatches;
        for (const std::string& e : tally.examples)
            if (g.examples.size() < kMaxExamples) g.examples.push_back(e);
    }
    return g;
}

}  // namespace

CrosscheckReport crosscheck_binary_form_odd(uint64_t max_modulus, unsigned jobs)
{
    CrosscheckReport report;
    for (uint64_t p : {uint64_t(3), uint64_t(5), uint64_t(7)}) {
        uint64_t pk = p;
        for (uint32_t s = 1; pk <= max_modulus; ++s, pk *= p) {
            CrosscheckGroup g = sweep_binary_group(p, s, pk, jobs);
            report.total_checked += g.checked;
            report.total_mismatches += g.mismatches;
            report.groups.push_back(std::move(g));
        }
    }
    return report;
}

CrosscheckReport crosscheck_scalar_square(uint32_t max_s)
{
    CrosscheckReport report;
    for (uint32_t s = 1; s <= max_s; ++s) {
        uint64_t n = uint64_t(1) << s;
        CrosscheckGroup g;
        g.suite = "scalar-2adic";
        g.p = 2;
        g.s = s;
        for (uint64_t a = 1; a < n; a += 2) {
            for (uint64_t b = a % 8; b < n; b += 8) {
                ++g.checked;
                try {
                    uint64_t x = congruence::solve_scalar_square_2adic(static_cast<int64_t>(a),
                                                                       static_cast<int64_t>(b), s);
                    if ((a * ((x * x) % n)) % n != b) {
                        ++g.mismatches;
                        if (g.examples.size() < kMaxExamples)
                            g.examples.push_back("scalar-2adic s=" + std::to_string(s) + " a="
                                                 + std::to_string(a) + " b=" + std::to_string(b)
                                                 + " -> invalid x=" + std::to_string(x));
                    }
                } catch (const std::exception& e) {
                    ++g.mismatches;
                    if (g.examples.size() < kMaxExamples)
                        g.examples.push_back("scalar-2adic s=" + std::to_string(s) + " a="
                                             + std::to_string(a) + " b=" + std::to_string(b)
                                             + " -> threw: " + e.what());
                }
            }
        }
        report.total_checked += g.checked;
        report.total_mismatches += g.mismatches;
        report.groups.push_back(std::move(g));
    }
    return report;
}

CrosscheckReport crosscheck_sum_two_squares(uint32_t max_s)
{
    CrosscheckReport report;
    CrosscheckGroup g;
    g.suite = "sum-squares-2adic";
    g.p = 2;
    for (uint32_t s = 1; s <= max_s; ++s) {
        g.s = s;
        uint64_t n = uint64_t(1) << s;
        uint64_t alpha = congruence::inverse_of_five(s);
        ++g.checked;
        try {
            auto [x, y] = congruence::solve_sum_two_squares_2adic(static_cast<int64_t>(alpha), s);
            if ((x * x + y * y) % n != alpha) {
                ++g.mismatches;
                if (g.examples.size() < kMaxExamples)
                    g.examples.push_back("sum-squares s=" + std::to_string(s) + " c="
                                         + std::to_string(alpha) + " -> invalid ("
                                         + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        } catch (const std::exception& e) {
            ++g.mismatches;
            if (g.examples.size() < kMaxExamples)
                g.examples.push_back("sum-squares s=" + std::to_string(s) + " -> threw: "
                                     + e.what());
        }
    }
    report.total_checked += g.checked;
    report.total_mismatches += g.mismatches;
    report.groups.push_back(std::move(g));
    return report;
}

CrosscheckReport crosscheck_all(uint64_t binary_max_modulus, uint32_t scalar_max_s,
                                uint32_t sum_max_s, unsigned jobs)
{
    CrosscheckReport report = crosscheck_binary_form_odd(binary_max_modulus, jobs);
    report.append(crosscheck_scalar_square(scalar_max_s));
    report.append(crosscheck_sum_two_squares(sum_max_s));
    return report;
}

}  // namespace quatring::oracle
