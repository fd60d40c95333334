#ifndef BSP_H
#define BSP_H

/* C API for the sequence-space norm and nilpotency-certification library.
 *
 * Conventions:
 *   - Every function returns a bsp_status; outputs go through pointers.
 *   - char** outputs receive a malloc'd NUL-terminated string; release
 *     with bsp_string_free.
 *   - bsp_vec is an opaque handle; release with bsp_vec_free.
 *   - On failure, bsp_last_error() describes the most recent error in
 *     the calling thread.
 *
 * Text formats:
 *   - vectors: "index:value,index:value,..." (1-based indices), or the
 *     JSON form {"entries": [[index, value], ...]} where noted;
 *   - space labels: "l:p", "b:p", "s:p", "c0";
 *   - direct sums: "L=2,3; M=1; N=1,2; c0=false".
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsp_status {
    BSP_OK = 0,
    BSP_ERR_INVALID = 1, /* argument outside its domain */
    BSP_ERR_PARSE = 2,   /* malformed textual input */
    BSP_ERR_LIMIT = 3,   /* an enumeration guard was exceeded */
    BSP_ERR_INTERNAL = 4 /* invariant failure inside the library */
} bsp_status;

typedef struct bsp_vec bsp_vec;

const char* bsp_version(void);
const char* bsp_last_error(void);
void bsp_string_free(char* s);

/* --- vectors ----------------------------------------------------- */

bsp_status bsp_vec_parse(const char* text, bsp_vec** out);
bsp_status bsp_vec_from_json(const char* json_text, bsp_vec** out);
bsp_status bsp_vec_to_text(const bsp_vec* v, char** out);
bsp_status bsp_vec_to_json(const bsp_vec* v, char** out);
bsp_status bsp_vec_support_size(const bsp_vec* v, int64_t* out);
bsp_status bsp_vec_coeff(const bsp_vec* v, int64_t index, double* out);
void bsp_vec_free(bsp_vec* v);

/* --- norms -------------------------------------------------------- */

/* Norm of v in the space named by the label. */
bsp_status bsp_norm(const char* space, const bsp_vec* v, double* out);

/* As bsp_norm; for the sup-based spaces also returns the attaining
 * witness as JSON ({"kind":"set",...} or {"kind":"chain",...}, null for
 * the zero vector or for the l/c0 families). */
bsp_status bsp_norm_with_witness(const char* space, const bsp_vec* v, double* out,
                                 char** witness_json);

/* Brute-force reference value (Schreier/Baernstein labels only;
 * support limits 20 and 12). */
bsp_status bsp_norm_oracle(const char* space, const bsp_vec* v, double* out);

/* --- the formal-inclusion order ------------------------------------ */

/* cmp: -1, 0, +1 for less / equal / greater. */
bsp_status bsp_order(const char* y, const char* z, int* cmp);

/* Inclusion constant, route, and operator facts as JSON. */
bsp_status bsp_inclusion_constant(const char* y, const char* z, char** json_out);
bsp_status bsp_classify(const char* y, const char* z, char** json_out);

bsp_status bsp_jameson_constant(double p, double q, double* out);

/* Canonical printed form of a label (round-trip normalization). */
bsp_status bsp_label_canonical(const char* label, char** out);

/* --- nilpotency ----------------------------------------------------- */

bsp_status bsp_spec_canonical(const char* spec, char** out);
bsp_status bsp_nilpotency_index(const char* spec, int* k);

/* JSON array of labels, sorted by the order. */
bsp_status bsp_witness_chain(const char* spec, char** json_out);

/* Full certification report as JSON. */
bsp_status bsp_certify(const char* spec, uint64_t exhaustive_limit, char** json_out);

/* --- randomized verification ---------------------------------------- */

bsp_status bsp_inclusion_trials(const char* y, const char* z, int64_t trials,
                                uint64_t seed, int record_ratios, char** json_out);
bsp_status bsp_oracle_trials(const char* space, int max_support, int64_t trials,
                             uint64_t seed, char** json_out);
bsp_status bsp_jameson_check(double p, double q, int64_t trials, uint64_t seed,
                             char** json_out);
bsp_status bsp_rearrangement_check(double p, int64_t trials, uint64_t seed,
                                   char** json_out);
bsp_status bsp_domination_probe(double p, double q, int blocks, double c,
                                int64_t budget, uint64_t seed, char** json_out);

/* Block vector with value 2^(1-k) on the image of the k-th dyadic block;
 * subseq = NULL means the identity, otherwise subseq_len must equal
 * 2^(k-1) and list strictly increasing indices with subseq[j] >= j. */
bsp_status bsp_make_xk(int k, const int64_t* subseq, size_t subseq_len, double p,
                       bsp_vec** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BSP_H */
