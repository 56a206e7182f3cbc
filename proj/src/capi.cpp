#include "quatring.h"

#include "congruence.hpp"
#include "modint.hpp"
#include "oracle.hpp"
#include "quat.hpp"
#include "witness.hpp"

#include <json.hpp>

#include <cstring>
#include <string>

struct qr_ring {
    quatring::quat::RingHandle handle;
    // The integer parameters as given: when 4 does not divide n the
    // canonical mod-4 tag is read off these, not the reduced residues.
    int64_t raw_a = 0;
    int64_t raw_b = 0;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(const std::string& msg)
{
    g_last_error = msg;
}

// Runs fn, translating the library's exception vocabulary to status codes.
template <typename Fn>
int guarded(Fn&& fn)
{
    try {
        g_last_error.clear();
        return fn();
    } catch (const quatring::modint::NotAUnitError& e) {
        set_error(e.what());
        return QR_ERR_NOT_A_UNIT;
    } catch (const quatring::congruence::NoSolutionError& e) {
        set_error(e.what());
        return QR_ERR_NO_SOLUTION;
    } catch (const quatring::quat::BudgetExceededError& e) {
        set_error(e.what());
        return QR_ERR_BUDGET_EXCEEDED;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QR_ERR_PARSE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return QR_ERR_DOMAIN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QR_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

int qr_abi_version(void)
{
    return 1;
}

const char* qr_status_name(int status)
{
    switch (status) {
        case QR_OK: return "ok";
        case QR_ERR_DOMAIN: return "domain_error";
        case QR_ERR_NOT_A_UNIT: return "not_a_unit";
        case QR_ERR_NO_SOLUTION: return "no_solution";
        case QR_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
        case QR_ERR_PARSE: return "parse_error";
        case QR_ERR_VERIFY_FAILED: return "verify_failed";
        case QR_ERR_UNSUPPORTED: return "unsupported";
        default: return "internal_error";
    }
}

const char* qr_last_error(void)
{
    return g_last_error.c_str();
}

void qr_string_free(char* s)
{
    delete[] s;
}

int qr_ring_create(int64_t n, int64_t a, int64_t b, qr_ring** out_ring)
{
    if (out_ring == nullptr) {
        set_error("out_ring must not be null");
        return QR_ERR_DOMAIN;
    }
    *out_ring = nullptr;
    return guarded([&]() {
        if (n < 2) throw std::domain_error("modulus must be at least 2");
        auto handle = quatring::quat::make_ring(static_cast<uint64_t>(n), a, b);
        *out_ring = new qr_ring{std::move(handle), a, b};
        return QR_OK;
    });
}

void qr_ring_destroy(qr_ring* ring)
{
    delete ring;
}

uint64_t qr_ring_modulus(const qr_ring* ring)
{
    return ring == nullptr ? 0 : ring->handle->n();
}

uint64_t qr_ring_param_a(const qr_ring* ring)
{
    return ring == nullptr ? 0 : ring->handle->a;
}

uint64_t qr_ring_param_b(const qr_ring* ring)
{
    return ring == nullptr ? 0 : ring->handle->b;
}

int qr_classify(const qr_ring* ring, char** out_json)
{
    if (ring == nullptr || out_json == nullptr) {
        set_error("null argument");
        return QR_ERR_DOMAIN;
    }
    return guarded([&]() {
        auto cls = quatring::witness::classify(ring->handle->n(), ring->raw_a, ring->raw_b);
        *out_json = dup_string(quatring::witness::classify_to_json(cls));
        return QR_OK;
    });
}

int qr_witness_build(const qr_ring* ring, char** out_json)
{
    if (ring == nullptr || out_json == nullptr) {
        set_error("null argument");
        return QR_ERR_DOMAIN;
    }
    return guarded([&]() {
        auto w = quatring::witness::build_witness(ring->handle->n(), ring->raw_a, ring->raw_b);
        *out_json = dup_string(quatring::witness::to_json(w));
        return QR_OK;
    });
}

int qr_witness_verify(const char* witness_json, char** out_report_json)
{
    if (witness_json == nullptr || out_report_json == nullptr) {
        set_error("null argument");
        return QR_ERR_DOMAIN;
    }
    return guarded([&]() {
        auto w = quatring::witness::witness_from_json(witness_json);
        auto report = quatring::witness::verify_witness(w);
        *out_report_json = dup_string(report.to_json());
        if (!report.ok) {
            set_error("witness verification failed");
            return static_cast<int>(QR_ERR_VERIFY_FAILED);
        }
        return static_cast<int>(QR_OK);
    });
}

int qr_census(const qr_ring* ring, uint64_t element_budget, char** out_json)
{
    if (ring == nullptr || out_json == nullptr) {
        set_error("null argument");
        return QR_ERR_DOMAIN;
    }
    return guarded([&]() {
        uint64_t budget =
            element_budget == 0 ? quatring::oracle::kDefaultElementBudget : element_budget;
        auto fp = quatring::oracle::census(ring->handle, budget);
        *out_json = dup_string(quatring::oracle::to_json(fp));
        return QR_OK;
    });
}

int qr_solve_form(const char* form, const char* modulus, char** out_json)
{
    if (form == nullptr || modulus == nullptr || out_json == nullptr) {
        set_error("null argument");
        return QR_ERR_DOMAIN;
    }
    *out_json = nullptr;
    return guarded([&]() {
        namespace cong = quatring::congruence;
        cong::BinaryForm bf = cong::parse_binary_form(form);
        cong::PrimePower pp = cong::parse_prime_power(modulus);
        nlohmann::ordered_json j;

        try {
            if (pp.p != 2) {
                if (bf.a == 0 || bf.b == 0)
                    throw std::domain_error(
                        "odd-modulus solving needs both x^2 and y^2 terms");
                auto [x, y] = pp.s == 1
                                  ? cong::solve_binary_form_mod_p(bf.a, bf.b, bf.c, pp.p)
                                  : cong::solve_binary_form_odd(bf.a, bf.b, bf.c, pp.p, pp.s);
                j["x"] = x;
                j["y"] = y;
            } else if (bf.a != 0 && bf.b == 0) {
                uint64_t x = cong::solve_scalar_square_2adic(bf.a, bf.c, pp.s);
                j["x"] = x;
            } else if (bf.a == 0 && bf.b != 0) {
                uint64_t y = cong::solve_scalar_square_2adic(bf.b, bf.c, pp.s);
                j["y"] = y;
            } else {
                uint64_t n = pp.value;
                uint64_t an = quatring::modint::normalize(bf.a, n);
                if (an != quatring::modint::normalize(bf.b, n)) {
                    set_error("2-adic solving supports a x^2 + a y^2 = c or a single square");
                    return static_cast<int>(QR_ERR_UNSUPPORTED);
                }
                if (an % 2 == 0)
                    throw std::domain_error("2-adic form coefficient must be odd");
                uint64_t cn = quatring::modint::mul_mod(
                    quatring::modint::normalize(bf.c, n),
                    quatring::modint::inverse_mod(an, n), n);
                auto [x, y] = cong::solve_sum_two_squares_2adic(static_cast<int64_t>(cn), pp.s);
                j["x"] = x;
                j["y"] = y;
            }
        } catch (const cong::NoSolutionError& e) {
            nlohmann::ordered_json err;
            err["error"] = "NoSolution";
            err["detail"] = e.what();
            *out_json = dup_string(err.dump());
            set_error(e.what());
            return static_cast<int>(QR_ERR_NO_SOLUTION);
        }
        *out_json = dup_string(j.dump());
        return static_cast<int>(QR_OK);
    });
}

int qr_crosscheck(const char* suite, uint64_t budget, unsigned jobs, char** out_jsonl)
{
    if (suite == nullptr || out_jsonl == nullptr) {
        set_error("null argument");
        return QR_ERR_DOMAIN;
    }
    return guarded([&]() {
        namespace oracle = quatring::oracle;
        std::string which = suite;
        oracle::CrosscheckReport report;

        uint64_t binary_budget = budget == 0 ? 2187 : budget;
        auto s_cap = [budget](uint32_t fallback) {
            if (budget == 0) return fallback;
            uint32_t s = 0;
            while ((uint64_t(1) << (s + 1)) <= budget && s + 1 <= 24) ++s;
            return s == 0 ? 1u : s;
        };

        if (which == "binary-odd") {
            report = oracle::crosscheck_binary_form_odd(binary_budget, jobs);
        } else if (which == "scalar-2adic") {
            report = oracle::crosscheck_scalar_square(s_cap(10));
        } else if (which == "sum-squares-2adic") {
            report = oracle::crosscheck_sum_two_squares(s_cap(12));
        } else if (which == "all") {
            report = oracle::crosscheck_all(binary_budget, s_cap(10), s_cap(12), jobs);
        } else {
            set_error("unknown suite '" + which + "'");
            return static_cast<int>(QR_ERR_UNSUPPORTED);
        }

        *out_jsonl = dup_string(report.to_jsonl());
        if (report.total_mismatches != 0) {
            set_error("crosscheck reported mismatches");
            return static_cast<int>(QR_ERR_VERIFY_FAILED);
        }
        return static_cast<int>(QR_OK);
    });
}

}  // extern "C"
