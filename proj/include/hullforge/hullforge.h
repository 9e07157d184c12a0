/* hullforge: MDS codes with one-dimensional hull over GF(q), q <= 2^20.
 *
 * C interface to the shared library.  All objects are opaque handles; all
 * fallible calls return hf_status and set a thread-local message readable
 * via hf_last_error().  Field elements travel as integer indices 0..q-1
 * (the index encodes the coefficient vector base p, constant term first).
 *
 * Strings returned through char** are heap-allocated; release them with
 * hf_string_free().
 */
#ifndef HULLFORGE_H
#define HULLFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
    HF_OK = 0,
    HF_EINVAL = 1,   /* null handle, bad argument */
    HF_EPRECOND = 2, /* construction preconditions not met */
    HF_ECERT = 3,    /* certification failed or claim violated */
    HF_EIO = 4,      /* malformed JSON or file content */
    HF_EBUDGET = 5   /* work budget exhausted */
} hf_status;

typedef struct hf_field hf_field;
typedef struct hf_code hf_code;

const char* hf_version(void);

/* Message for the most recent failing call on this thread. */
const char* hf_last_error(void);

/* modulus: NULL for the default monic irreducible, else m+1 coefficients
 * (constant term first, leading coefficient 1). */
hf_status hf_field_create(uint32_t p, uint32_t m, const uint32_t* modulus,
                          size_t modulus_len, hf_field** out);
void hf_field_destroy(hf_field* field);
uint32_t hf_field_order(const hf_field* field);
uint32_t hf_field_characteristic(const hf_field* field);
uint32_t hf_field_degree(const hf_field* field);

/* Arithmetic on element indices.  Out-of-range indices give HF_EPRECOND. */
hf_status hf_field_add(const hf_field* field, uint32_t a, uint32_t b, uint32_t* out);
hf_status hf_field_sub(const hf_field* field, uint32_t a, uint32_t b, uint32_t* out);
hf_status hf_field_mul(const hf_field* field, uint32_t a, uint32_t b, uint32_t* out);
hf_status hf_field_div(const hf_field* field, uint32_t a, uint32_t b, uint32_t* out);
hf_status hf_field_neg(const hf_field* field, uint32_t a, uint32_t* out);
hf_status hf_field_inv(const hf_field* field, uint32_t a, uint32_t* out);
hf_status hf_field_pow(const hf_field* field, uint32_t a, uint64_t e, uint32_t* out);
hf_status hf_field_is_square(const hf_field* field, uint32_t a, int* out);
hf_status hf_field_sqrt(const hf_field* field, uint32_t a, uint32_t* out);

/* Construct a code.  params_json is an object naming the family and its
 * parameters, e.g.
 *   {"family":"even-q","n":6,"s":1}
 *   {"family":"square-3","N":9,"s":1}
 *   {"family":"mult-cosets","n":8,"t":5,"s":1,"variant":8,"extend":true}
 * Recognized keys: family, n, N, s, t, r, ell, variant, extend, dual.
 * "dual":true replaces the result with its dual (re-certified).
 * budget 0 means the default work budget (HULLFORGE_BUDGET or 1e8 steps).
 * The returned code always carries a full certificate. */
hf_status hf_construct(const hf_field* field, const char* params_json,
                       uint64_t budget, hf_code** out);

/* Dual of a constructed code, re-certified.  Requires n - k > 1. */
hf_status hf_code_dual(const hf_field* field, const hf_code* code,
                       uint64_t budget, hf_code** out);

void hf_code_destroy(hf_code* code);
uint32_t hf_code_length(const hf_code* code);
uint32_t hf_code_dimension(const hf_code* code);
/* Certified minimum distance, or -1 when the certificate carries none. */
int32_t hf_code_distance(const hf_code* code);

/* Serialized views. */
hf_status hf_code_artifact(const hf_field* field, const hf_code* code, char** out);
hf_status hf_code_certificate(const hf_code* code, char** out);
hf_status hf_code_generator_text(const hf_field* field, const hf_code* code, char** out);

/* Verify an artifact or a raw generator matrix, both self-describing JSON
 * (the field rides inside).  Writes the analysis certificate to *report and
 * sets *certified to 1 iff hull dimension is exactly 1 and the code is MDS.
 * Rank-deficient input is analyzed on its row space and flagged in the
 * report, not rejected. */
hf_status hf_verify(const char* input_json, uint64_t budget, char** report,
                    int* certified);

/* Re-render an artifact.  format: "json" (canonical serialization), "text"
 * (generator matrix as rows of element indices), "parity-check" (generator
 * of the dual code as matrix JSON). */
hf_status hf_export(const char* artifact_json, const char* format, char** out);

/* Atlas sweep: every admissible parameter tuple for this field with
 * N <= max_n (0 = no cap), constructed and certified row by row.  families
 * filters by comma-separated names ("" or NULL = all; "square" covers all
 * twelve square families).  row_budget 0 = default per-row budget.
 * Deterministic CSV with header q,family,params,N,K,d,certified. */
hf_status hf_atlas(const hf_field* field, uint32_t max_n, const char* families,
                   uint64_t row_budget, char** out_csv);

void hf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HULLFORGE_H */
