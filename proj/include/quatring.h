#ifndef QUATRING_H
#define QUATRING_H

/*
 * quatring — quaternion rings (a,b / Z/nZ): classification into the
 * canonical isomorphism classes, machine-checkable isomorphism witnesses,
 * quadratic congruence solving, and brute-force oracle runs at small
 * moduli.
 *
 * This is the stable C surface of the shared library. All structured
 * results are returned as JSON strings allocated by the library; release
 * them with qr_string_free(). Handles are opaque; every function returns
 * a qr_status, with qr_last_error() carrying a human-readable detail for
 * the calling thread's most recent failure.
 */

#include <stdint.h>

#if defined(_WIN32)
#define QUATRING_API __declspec(dllexport)
#else
#define QUATRING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qr_status {
    QR_OK = 0,
    QR_ERR_DOMAIN = 1,          /* argument outside the operation's domain */
    QR_ERR_NOT_A_UNIT = 2,      /* a ring parameter shares a factor with n */
    QR_ERR_NO_SOLUTION = 3,     /* congruence has no solution */
    QR_ERR_BUDGET_EXCEEDED = 4, /* enumeration refused; raise the budget */
    QR_ERR_PARSE = 5,           /* malformed form/modulus/witness input */
    QR_ERR_VERIFY_FAILED = 6,   /* witness relations do not hold */
    QR_ERR_UNSUPPORTED = 7,     /* recognized but unsupported request */
    QR_ERR_INTERNAL = 8
} qr_status;

/* A quaternion ring (a,b / Z/nZ) with validated unit parameters. */
typedef struct qr_ring qr_ring;

QUATRING_API int qr_abi_version(void);

QUATRING_API const char* qr_status_name(int status);

/* Detail message for the current thread's most recent error ("" if none). */
QUATRING_API const char* qr_last_error(void);

QUATRING_API void qr_string_free(char* s);

/* n >= 2; a, b may be negative and are normalized mod n. */
QUATRING_API int qr_ring_create(int64_t n, int64_t a, int64_t b, qr_ring** out_ring);
QUATRING_API void qr_ring_destroy(qr_ring* ring);
QUATRING_API uint64_t qr_ring_modulus(const qr_ring* ring);
QUATRING_API uint64_t qr_ring_param_a(const qr_ring* ring);
QUATRING_API uint64_t qr_ring_param_b(const qr_ring* ring);

/* {"tag":"HAMILTON"|"ELL","split":bool,"collapse":bool} */
QUATRING_API int qr_classify(const qr_ring* ring, char** out_json);

/* Witness document: { source: {n,a,b}, factors: [...] }. The witness is
 * verified before it is returned. */
QUATRING_API int qr_witness_build(const qr_ring* ring, char** out_json);

/* Re-checks a witness document from scratch. Returns QR_OK when all
 * relations hold, QR_ERR_VERIFY_FAILED otherwise; out_report_json carries
 * {"ok":...,"failures":[...]} in both cases. */
QUATRING_API int qr_witness_verify(const char* witness_json, char** out_report_json);

/* Exhaustive invariant census; element_budget = 0 uses the default
 * (65536 elements, i.e. n <= 16). */
QUATRING_API int qr_census(const qr_ring* ring, uint64_t element_budget, char** out_json);

/* Solve "A x^2 + B y^2 = C" (terms optional) modulo the prime power in
 * `modulus` ("p^s" or a plain prime-power integer). On success the JSON
 * carries the solution; on QR_ERR_NO_SOLUTION it carries {"error":...}. */
QUATRING_API int qr_solve_form(const char* form, const char* modulus, char** out_json);

/* suite: "binary-odd", "scalar-2adic", "sum-squares-2adic" or "all".
 * budget = 0 uses the per-suite defaults (binary forms: all p^s <= 2187
 * with p in {3,5,7}; scalar: s <= 10; sum of squares: s <= 12); a nonzero
 * budget caps the moduli at that value instead. jobs = 0 auto-detects.
 * Returns QR_OK on zero mismatches; out_jsonl carries one JSON record per
 * checked group plus a summary line. */
QUATRING_API int qr_crosscheck(const char* suite, uint64_t budget, unsigned jobs,
                               char** out_jsonl);

#ifdef __cplusplus
}
#endif

#endif /* QUATRING_H */
