#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quatring.h>

#include <string>

namespace {

struct Str {
    char* value = nullptr;
    ~Str() { qr_string_free(value); }
    std::string str() const { return value == nullptr ? std::string() : std::string(value); }
};

struct Ring {
    qr_ring* ring = nullptr;
    ~Ring() { qr_ring_destroy(ring); }
};

}  // namespace

TEST_CASE("abi and status names")
{
    CHECK(qr_abi_version() == 1);
    CHECK(std::string(qr_status_name(QR_OK)) == "ok");
    CHECK(std::string(qr_status_name(QR_ERR_NOT_A_UNIT)) == "not_a_unit");
}

TEST_CASE("ring lifecycle and accessors")
{
    Ring r;
    REQUIRE(qr_ring_create(8, -1, 3, &r.ring) == QR_OK);
    CHECK(qr_ring_modulus(r.ring) == 8);
    CHECK(qr_ring_param_a(r.ring) == 7);
    CHECK(qr_ring_param_b(r.ring) == 3);
}

TEST_CASE("ring creation errors carry detail")
{
    Ring r;
    CHECK(qr_ring_create(8, 2, 3, &r.ring) == QR_ERR_NOT_A_UNIT);
    CHECK(std::string(qr_last_error()).find("not a unit") != std::string::npos);
    CHECK(r.ring == nullptr);
    CHECK(qr_ring_create(1, 1, 1, &r.ring) == QR_ERR_DOMAIN);
}

TEST_CASE("classify through the C surface")
{
    Ring r;
    REQUIRE(qr_ring_create(15, -1, -1, &r.ring) == QR_OK);
    Str json;
    REQUIRE(qr_classify(r.ring, &json.value) == QR_OK);
    CHECK(json.str() == R"({"tag":"HAMILTON","split":true,"collapse":true})");
}

TEST_CASE("witness build then verify round-trips")
{
    Ring r;
    REQUIRE(qr_ring_create(24, 7, 11, &r.ring) == QR_OK);
    Str witness;
    REQUIRE(qr_witness_build(r.ring, &witness.value) == QR_OK);
    CHECK(witness.str().find("\"source\"") != std::string::npos);

    Str report;
    CHECK(qr_witness_verify(witness.value, &report.value) == QR_OK);
    CHECK(report.str().find("\"ok\": true") != std::string::npos);

    // outputs are byte-stable across calls
    Str witness2;
    REQUIRE(qr_witness_build(r.ring, &witness2.value) == QR_OK);
    CHECK(witness.str() == witness2.str());
}

TEST_CASE("verify rejects corrupted documents with QR_ERR_VERIFY_FAILED")
{
    Ring r;
    REQUIRE(qr_ring_create(8, 3, 5, &r.ring) == QR_OK);
    Str witness;
    REQUIRE(qr_witness_build(r.ring, &witness.value) == QR_OK);

    std::string text = witness.str();
    size_t pos = text.find("\"phi_i\": [");
    REQUIRE(pos != std::string::npos);
    // bump the scalar coefficient's first digit by one (a +-1 change mod 8)
    size_t digit = text.find_first_of("0123456789", pos + 10);
    text[digit] = static_cast<char>('0' + (text[digit] - '0' + 1) % 10);

    Str report;
    int status = qr_witness_verify(text.c_str(), &report.value);
    CHECK(status == QR_ERR_VERIFY_FAILED);
    CHECK(report.str().find("\"ok\": false") != std::string::npos);

    Str report2;
    CHECK(qr_witness_verify("{ not json", &report2.value) == QR_ERR_PARSE);
}

TEST_CASE("census through the C surface")
{
    Ring r;
    REQUIRE(qr_ring_create(4, -1, -1, &r.ring) == QR_OK);
    Str json;
    REQUIRE(qr_census(r.ring, 0, &json.value) == QR_OK);
    CHECK(json.str().find("\"involution_count\":32") != std::string::npos);

    Ring big;
    REQUIRE(qr_ring_create(17, 1, 1, &big.ring) == QR_OK);
    Str none;
    CHECK(qr_census(big.ring, 0, &none.value) == QR_ERR_BUDGET_EXCEEDED);
    CHECK(qr_census(big.ring, 90000, &none.value) == QR_OK);
}

TEST_CASE("solve through the C surface")
{
    Str json;
    REQUIRE(qr_solve_form("x^2 + y^2 = -1", "3^2", &json.value) == QR_OK);
    CHECK(json.str() == R"({"x":4,"y":1})");

    Str scalar;
    REQUIRE(qr_solve_form("3 x^2 = 3", "2^4", &scalar.value) == QR_OK);
    CHECK(scalar.str() == R"({"x":1})");

    Str scalar_y;
    REQUIRE(qr_solve_form("1 y^2 = 9", "16", &scalar_y.value) == QR_OK);
    CHECK(scalar_y.str() == R"({"y":3})");

    Str odd_prime;
    REQUIRE(qr_solve_form("x^2 + y^2 = -1", "7", &odd_prime.value) == QR_OK);
    CHECK(odd_prime.str() == R"({"x":2,"y":3})");

    Str twoadic;
    REQUIRE(qr_solve_form("5x^2+5y^2=1", "2^6", &twoadic.value) == QR_OK);
    CHECK(twoadic.str().find("\"x\":") != std::string::npos);

    Str nosol;
    CHECK(qr_solve_form("x^2 + y^2 = 3", "2^2", &nosol.value) == QR_ERR_NO_SOLUTION);
    CHECK(nosol.str().find("NoSolution") != std::string::npos);

    Str bad;
    CHECK(qr_solve_form("x + y = 1", "3^2", &bad.value) == QR_ERR_PARSE);
    CHECK(qr_solve_form("x^2 + y^2 = 1", "12", &bad.value) == QR_ERR_PARSE);
    CHECK(qr_solve_form("3 x^2 + 5 y^2 = 1", "2^4", &bad.value) == QR_ERR_UNSUPPORTED);
}

TEST_CASE("crosscheck through the C surface")
{
    Str jsonl;
    REQUIRE(qr_crosscheck("sum-squares-2adic", 0, 1, &jsonl.value) == QR_OK);
    CHECK(jsonl.str().find("\"summary\":true") != std::string::npos);

    Str small;
    REQUIRE(qr_crosscheck("binary-odd", 9, 2, &small.value) == QR_OK);
    CHECK(small.str().find("\"mismatches\":0") != std::string::npos);

    Str bad;
    CHECK(qr_crosscheck("nope", 0, 1, &bad.value) == QR_ERR_UNSUPPORTED);
}
