/*
 * C interface of the nichols library.
 *
 * All computations are exact. Results cross the boundary as JSON text owned
 * by the library; release every returned string with nq_string_free. Matrix
 * handles are opaque; release them with nq_matrix_free. Error details for the
 * calling thread are available via nq_last_error.
 */
#ifndef NICHOLS_H
#define NICHOLS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nq_status {
    NQ_OK = 0,
    NQ_ERROR_VERIFY = 1, /* an exact identity or re-verification failed */
    NQ_ERROR_INPUT = 2,  /* malformed input, bad parameters */
    NQ_ERROR_INTERNAL = 3
} nq_status;

typedef struct nq_matrix nq_matrix;

/* Description of the most recent failure on this thread; empty when none. */
const char* nq_last_error(void);

void nq_string_free(char* text);

/*
 * Matrix input is a JSON object with exactly one of
 *   "cartan":                     [[int]]  (generalized Cartan matrix)
 *   "braiding_exponents_doubled": [[int]]  (t-exponents, i.e. doubled
 *                                           q-exponents of the braiding)
 * average != 0 symmetrizes Cartan input entrywise before use.
 */
nq_status nq_matrix_parse(const char* json_text, int average, nq_matrix** out);
nq_status nq_matrix_load(const char* path, int average, nq_matrix** out);
void nq_matrix_free(nq_matrix* m);
int nq_matrix_size(const nq_matrix* m);

/* One JSON line per relation table block, delivered in multidegree order. */
typedef void (*nq_emit_fn)(const char* json_line, void* user);

/*
 * Generating sets of the defining ideal at one degree.
 *   side: "right" or "left"
 *   kind: "prerelations" or "constants"
 * nq_relations returns the whole table; nq_relations_stream emits a header
 * line followed by one line per block. mark_redundant != 0 additionally
 * flags, per relation, membership in the ideal generated by the lower-degree
 * output (informational; redundant entries are kept).
 */
nq_status nq_relations(const nq_matrix* m, int degree, const char* side, const char* kind,
                       int mark_redundant, char** out_json);
nq_status nq_relations_stream(const nq_matrix* m, int degree, const char* side, const char* kind,
                              int mark_redundant, nq_emit_fn emit, void* user);

/* Re-verifies a relation table (annihilation by the differential element). */
nq_status nq_relations_verify(const nq_matrix* m, const char* table_json);

/*
 * Candidate relation degrees from the full-twist quadratic form. Points are
 * restricted to non-negative coordinates (the ones indexing blocks) unless
 * all_integers is nonzero.
 */
nq_status nq_degrees(const nq_matrix* m, int height_max, int all_integers, char** out_json);

/* Graded dimensions of the Nichols algebra through degree n_max. */
nq_status nq_dims(const nq_matrix* m, int n_max, char** out_json);

/*
 * q -> 1 specialization of the degree-n pre-relations. When table_json is
 * non-NULL it is re-verified and used instead of recomputing.
 */
nq_status nq_specialize(const nq_matrix* m, int degree, const char* table_json, char** out_json);

/*
 * Radical-membership witness search on the specialized pre-relations
 * (requires Cartan input). Emits verdict NotInRadical with the certifying
 * adjoint chain, or Inconclusive.
 */
nq_status nq_witness(const nq_matrix* m, int degree, int depth, const char* table_json,
                     char** out_json);

/* Garside left/right balance of the computed spans at one degree. */
nq_status nq_balance(const nq_matrix* m, int degree, const char* kind, char** out_json);

/*
 * Seed-driven identity suites (braid algebra, differential calculus, bar
 * laws) on random monomial braidings. NQ_ERROR_VERIFY when a counterexample
 * is found; the report text is returned either way.
 */
nq_status nq_check_identities(int n_max, unsigned seed, int trials, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* NICHOLS_H */
