// quatring command-line tool. All structure work happens behind the
// shared library's C surface; this binary only parses flags, moves JSON
// between the library and stdio, and maps statuses to exit codes
// (0 success, 1 verification/solution failure, 2 usage or domain errors).

#include <quatring.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int exit_code_for(int status)
{
    switch (status) {
        case QR_OK: return 0;
        case QR_ERR_NO_SOLUTION:
        case QR_ERR_VERIFY_FAILED: return 1;
        default: return 2;
    }
}

void report_failure(int status)
{
    std::cerr << "error (" << qr_status_name(status) << "): " << qr_last_error() << "\n";
}

struct RingArgs {
    int64_t n = 0;
    int64_t a = 0;
    int64_t b = 0;
};

void add_ring_flags(CLI::App* cmd, RingArgs& args)
{
    cmd->add_option("-n", args.n, "modulus (>= 2)")->required();
    cmd->add_option("-a", args.a, "first unit parameter")->required();
    cmd->add_option("-b", args.b, "second unit parameter")->required();
}

class RingGuard {
public:
    ~RingGuard() { qr_ring_destroy(ring); }
    qr_ring* ring = nullptr;
};

class StringGuard {
public:
    ~StringGuard() { qr_string_free(value); }
    char* value = nullptr;
};

uint64_t env_element_budget()
{
    const char* env = std::getenv("QUATRING_BUDGET");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') return 0;
    return static_cast<uint64_t>(v);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"quaternion rings over Z/nZ: classification, isomorphism witnesses, "
                 "congruence solving and oracle runs"};
    app.require_subcommand(1);

    RingArgs classify_args;
    CLI::App* classify_cmd = app.add_subcommand("classify", "canonical isomorphism class of (a,b / Z/nZ)");
    add_ring_flags(classify_cmd, classify_args);

    RingArgs witness_args;
    std::string witness_out;
    CLI::App* witness_cmd = app.add_subcommand("witness", "emit a verified isomorphism witness");
    add_ring_flags(witness_cmd, witness_args);
    witness_cmd->add_option("--out", witness_out, "also write the witness JSON to this file");

    std::string verify_in;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a witness file");
    verify_cmd->add_option("--in", verify_in, "witness JSON file")->required();

    std::string solve_form, solve_mod;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a binary quadratic congruence");
    solve_cmd->add_option("--form", solve_form, "e.g. \"x^2 + y^2 = -1\"")->required();
    solve_cmd->add_option("--mod", solve_mod, "prime power, e.g. \"3^2\" or \"9\"")->required();

    RingArgs census_args;
    CLI::App* census_cmd = app.add_subcommand("census", "exhaustive invariant fingerprint");
    add_ring_flags(census_cmd, census_args);

    std::string suite = "all";
    uint64_t budget = 0;
    unsigned jobs = 0;
    CLI::App* crosscheck_cmd = app.add_subcommand("crosscheck", "exhaustive solver validation");
    crosscheck_cmd->add_option("--suite", suite,
                               "binary-odd | scalar-2adic | sum-squares-2adic | all");
    crosscheck_cmd->add_option("--budget", budget, "modulus cap (0 = per-suite defaults)");
    crosscheck_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (classify_cmd->parsed()) {
        RingGuard ring;
        int status = qr_ring_create(classify_args.n, classify_args.a, classify_args.b, &ring.ring);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        StringGuard json;
        status = qr_classify(ring.ring, &json.value);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        std::cout << json.value << "\n";
        return 0;
    }

    if (witness_cmd->parsed()) {
        RingGuard ring;
        int status = qr_ring_create(witness_args.n, witness_args.a, witness_args.b, &ring.ring);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        StringGuard json;
        status = qr_witness_build(ring.ring, &json.value);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        if (!witness_out.empty()) {
            std::ofstream out(witness_out);
            if (!out) {
                std::cerr << "error: cannot write " << witness_out << "\n";
                return 2;
            }
            out << json.value << "\n";
        }
        std::cout << json.value << "\n";

        StringGuard report;
        status = qr_witness_verify(json.value, &report.value);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        std::ifstream in(verify_in);
        if (!in) {
            std::cerr << "error: cannot read " << verify_in << "\n";
            return 2;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();

        StringGuard report;
        int status = qr_witness_verify(text.c_str(), &report.value);
        if (report.value != nullptr) std::cout << report.value << "\n";
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        return 0;
    }

    if (solve_cmd->parsed()) {
        StringGuard json;
        int status = qr_solve_form(solve_form.c_str(), solve_mod.c_str(), &json.value);
        if (json.value != nullptr) std::cout << json.value << "\n";
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        return 0;
    }

    if (census_cmd->parsed()) {
        RingGuard ring;
        int status = qr_ring_create(census_args.n, census_args.a, census_args.b, &ring.ring);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        StringGuard json;
        status = qr_census(ring.ring, env_element_budget(), &json.value);
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        std::cout << json.value << "\n";
        return 0;
    }

    if (crosscheck_cmd->parsed()) {
        StringGuard jsonl;
        int status = qr_crosscheck(suite.c_str(), budget, jobs, &jsonl.value);
        if (jsonl.value != nullptr) std::cout << jsonl.value;
        if (status != QR_OK) {
            report_failure(status);
            return exit_code_for(status);
        }
        return 0;
    }

    return 2;
}
