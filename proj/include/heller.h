/* C interface to the heller library: syzygy operators, stable module
 * categories, and adjoint searches over prime fields.
 *
 * All functions returning int use the error codes below. String outputs are
 * heap-allocated JSON documents; release them with heller_string_free.
 * Handles are opaque and freed with their matching _free function. On any
 * failure, heller_last_error() describes the problem for the calling thread.
 */
#ifndef HELLER_H
#define HELLER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HELLER_OK 0             /* success */
#define HELLER_MISMATCH 1       /* computation ran, expected results differ */
#define HELLER_USER_ERROR 2     /* malformed input, unknown name, bad prime */
#define HELLER_INTERNAL_ERROR 3 /* invariant violation inside the library */

typedef struct heller_algebra heller_algebra;
typedef struct heller_module heller_module;

const char* heller_version(void);

/* Last error message for the calling thread; empty string if none. */
const char* heller_last_error(void);

void heller_string_free(char* s);

/* name in {A, B, C1..C8}, prime <= 997. */
int heller_algebra_builtin(const char* name, uint32_t prime, heller_algebra** out);
int heller_algebra_from_json(const char* json_text, heller_algebra** out);
int heller_algebra_to_json(const heller_algebra* a, char** out_json);
void heller_algebra_free(heller_algebra* a);

/* Module in pair form or raw action-matrix form; see docs/formats.md. */
int heller_module_from_json(const heller_algebra* a, const char* json_text,
                            heller_module** out);
/* Catalog object (X1..X25, P1, P2) of a builtin algebra. */
int heller_module_catalog(const heller_algebra* a, const char* label, heller_module** out);
/* Deterministic pseudo-random module of dimension <= max_dim. */
int heller_module_random(const heller_algebra* a, uint64_t seed, int max_dim,
                         heller_module** out);
int heller_module_dim(const heller_module* m, int* out_dim);
void heller_module_free(heller_module* m);

/* Syzygy: kernel of the projective cover. */
int heller_omega(const heller_module* m, heller_module** out);

/* dim Hom(m, n) modulo maps factoring through projectives. */
int heller_sthom_dim(const heller_module* m, const heller_module* n, int* out_dim);

int heller_is_stably_isomorphic(const heller_module* m, const heller_module* n,
                                uint64_t seed, int* out_iso);

/* Krull-Schmidt decomposition; JSON with summand dims and catalog labels. */
int heller_decompose(const heller_module* m, uint64_t seed, char** out_json);

/* Multiset of catalog labels of the summands (builtin algebras only). */
int heller_identify(const heller_module* m, char** out_json);

/* Batch reports; each returns a versioned JSON document (docs/report-schema.md).
 * heller_verify_paper returns HELLER_MISMATCH when the run disagrees with the
 * bundled reference tables; the report is still written in that case. */
int heller_verify_paper(const char* algebra, uint32_t prime, int max_eps_dim,
                        uint64_t seed, char** out_report);
int heller_left_adjoint(const char* algebra, uint32_t prime, int max_eps_dim,
                        uint64_t seed, char** out_report);
int heller_right_adjoint(const char* algebra, uint32_t prime, char** out_report);
int heller_sthom_matrix(const char* algebra, uint32_t prime, char** out_report);

#ifdef __cplusplus
}
#endif

#endif
