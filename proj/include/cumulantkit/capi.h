#ifndef CUMULANTKIT_CAPI_H
#define CUMULANTKIT_CAPI_H

/* C interface to the cumulant-kit core. Every call returns an opaque result
 * handle owning either a UTF-8 output string (usually JSON) or an error
 * payload; inspect the status, read the strings, then free the handle.
 * Handles are independent and may be used from any thread. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
    CK_OK = 0,
    CK_ERROR_INVALID_ARGUMENT = 1,
    CK_ERROR_INVALID_PARTITION = 2,
    CK_ERROR_INVALID_SUBSET = 3,
    CK_ERROR_INVALID_GAP = 4,
    CK_ERROR_ARITY_MISMATCH = 5,
    CK_ERROR_COLOUR_MISMATCH = 6,
    CK_ERROR_NOT_COMPARABLE = 7,
    CK_ERROR_UNSUPPORTED_FOR_CROSSING = 8,
    CK_ERROR_NOT_IN_AUGMENTATION_IDEAL = 9,
    CK_ERROR_EMPTY_EXCLUDED = 10,
    CK_ERROR_TRUNCATION_EXCEEDED = 11,
    CK_ERROR_NOT_INVERTIBLE = 12,
    CK_ERROR_ALGEBRA_MISMATCH = 13,
    CK_ERROR_INTERNAL_INCONSISTENCY = 14,
    CK_ERROR_PARSE = 15,
    CK_VERIFICATION_FAILED = 16,
    CK_ERROR_UNKNOWN = 17
} ck_status;

typedef struct ck_result ck_result;

ck_status ck_result_status(const ck_result* r);
/* Output string; NULL when the call failed (still set for
 * CK_VERIFICATION_FAILED, which carries the report). */
const char* ck_result_output(const ck_result* r);
/* JSON error payload {"error":{"code":...,"message":...}}; NULL on success. */
const char* ck_result_error(const ck_result* r);
void ck_result_free(ck_result* r);

const char* ck_status_name(ck_status s);
const char* ck_version(void);

/* Partitions are accepted as JSON {"n":..,"blocks":[[..],..]}, a bare array
 * of blocks, or the compact form "1,2,5|3,4". Outputs are JSON. */

/* All partitions (mode "sp") or noncrossing partitions (mode "nc") of [n]. */
ck_result* ck_enumerate(const char* mode, int n);
ck_result* ck_nc_closure(const char* partition);
/* Sum of set partitions with the given noncrossing closure. */
ck_result* ck_nc_star(const char* partition);
/* Gap insertion of `insert` into gap `gap` of `partition`. */
ck_result* ck_gap_compose(const char* partition, int gap, const char* insert);
/* Simultaneous insertion; `inputs` is a JSON array of deg+1 partitions. */
ck_result* ck_gap_compose_full(const char* partition, const char* inputs);
/* Block substitution; `composition` and the entries of `inputs` are arrays
 * of blocks in slot order. */
ck_result* ck_block_compose(const char* composition, const char* inputs);
/* algebra: gap|gap-nc|gap-sp|block|block-nc|block-sp; half: NULL|prec|succ
 * (halves only for gap algebras). Input: partition or word. */
ck_result* ck_coproduct(const char* algebra, const char* half, const char* input);
/* Table of Moebius values on all partitions of degree <= max_degree. */
ck_result* ck_moebius_table(const char* mode, int max_degree);
/* which: prec|succ|star; with inverse != 0 evaluates the convolution
 * inverse. Returns the value on the given noncrossing partition. */
ck_result* ck_psi(const char* which, int inverse, const char* partition);
/* flavor: free|classical|boolean|monotone; sequence is a JSON array of
 * rationals ("p/q" strings or integers) giving indices 1..N. */
ck_result* ck_moments(const char* flavor, const char* cumulants, int n);
ck_result* ck_cumulants(const char* flavor, const char* moments, int n);
/* table: moments|cumulants; renders the degree-n polynomial. A NULL
 * variable name picks the flavor's conventional letter. */
ck_result* ck_symbolic(const char* table, const char* flavor, const char* variable, int n);
/* Fibre of the lattice interval [lower, upper]. */
ck_result* ck_phi(const char* lower, const char* upper);
/* suite: comodule|unshuffle|coalgebra-maps|operads; mode: nc|sp|both.
 * Returns the JSON report; status CK_VERIFICATION_FAILED when any identity
 * fails. */
ck_result* ck_verify(const char* suite, int max_degree, const char* mode);

#ifdef __cplusplus
}
#endif

#endif /* CUMULANTKIT_CAPI_H */
