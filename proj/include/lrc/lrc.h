#ifndef LRC_LRC_H
#define LRC_LRC_H

/*
 * C interface to the lrc library.
 *
 * Every function returns an lrc_status. On failure a message is available
 * from lrc_last_error() until the next call on the same thread. Handles are
 * opaque and owned by the caller, who releases them with the matching
 * *_free function. Strings returned through char** are allocated by the
 * library and released with lrc_string_free. Weights, partitions and words
 * are passed as int arrays; word letters are 1-based.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LRC_BUILDING_LIBRARY)
#    define LRC_API __declspec(dllexport)
#  else
#    define LRC_API __declspec(dllimport)
#  endif
#else
#  define LRC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lrc_status {
  LRC_OK = 0,
  LRC_ERR_DOMAIN = 1,           /* mathematical precondition violated */
  LRC_ERR_RESOURCE = 2,         /* a configured cap was exceeded */
  LRC_ERR_INVALID_ARGUMENT = 3, /* null pointer, bad size, bad enum */
  LRC_ERR_UNSUPPORTED = 4,      /* operation not available for this Cartan type */
  LRC_ERR_INTERNAL = 5,         /* broken invariant (e.g. Laurent violation) */
  LRC_ERR_PARSE = 6             /* malformed text or JSON input */
} lrc_status;

typedef enum lrc_mode { LRC_TROPICAL = 0, LRC_GEOMETRIC = 1 } lrc_mode;

typedef struct lrc_cartan lrc_cartan;
typedef struct lrc_tuple lrc_tuple;
typedef struct lrc_seed lrc_seed;
typedef struct lrc_matrix lrc_matrix;

LRC_API const char* lrc_version(void);
LRC_API const char* lrc_last_error(void);
LRC_API const char* lrc_status_name(lrc_status status);
LRC_API void lrc_string_free(char* s);

/* Cartan matrices */
LRC_API lrc_status lrc_cartan_from_name(const char* name, lrc_cartan** out);
/* entries is row-major rank x rank. */
LRC_API lrc_status lrc_cartan_from_entries(const int* entries, size_t rank, lrc_cartan** out);
LRC_API void lrc_cartan_free(lrc_cartan* a);
LRC_API lrc_status lrc_cartan_rank(const lrc_cartan* a, size_t* out);
LRC_API lrc_status lrc_cartan_is_finite(const lrc_cartan* a, int* out);
/* {"rank", "entries", "symmetrizer", "finite", "positive_roots", "longest_word", "star"} */
LRC_API lrc_status lrc_cartan_info_json(const lrc_cartan* a, char** out);

/* Multiplicities */
LRC_API lrc_status lrc_lr_coefficient(const int* lambda, size_t lambda_len, const int* nu,
                                      size_t nu_len, const int* mu, size_t mu_len, uint64_t* out);
/* Weights have rank() coordinates. */
LRC_API lrc_status lrc_tensor_multiplicity(const lrc_cartan* a, const int* lambda, const int* nu,
                                           const int* mu, uint64_t* out);
LRC_API lrc_status lrc_racah_oracle(const lrc_cartan* a, const int* lambda, const int* nu,
                                    const int* mu, uint64_t* out);
/* {"count", "word", "witnesses": [[...], ...]} on the default reduced word of w0. */
LRC_API lrc_status lrc_multiplicity_witnesses_json(const lrc_cartan* a, const int* lambda,
                                                   const int* nu, const int* mu, char** out);

/* Parameter tuples */
/* values are decimal strings ("3", "3/2"). */
LRC_API lrc_status lrc_tuple_new(lrc_mode mode, const int* word, const char* const* values,
                                 size_t length, lrc_tuple** out);
LRC_API lrc_status lrc_tuple_from_json(const char* json, lrc_tuple** out);
LRC_API void lrc_tuple_free(lrc_tuple* t);
LRC_API lrc_status lrc_tuple_to_json(const lrc_tuple* t, char** out);
LRC_API lrc_status lrc_tuple_transition(const lrc_tuple* t, const lrc_cartan* a, const int* target,
                                        size_t target_len, lrc_tuple** out);
/* One braid move; kind is 2 or 3, position is 0-based. */
LRC_API lrc_status lrc_tuple_braid_move(const lrc_tuple* t, const lrc_cartan* a, size_t position,
                                        int kind, lrc_tuple** out);
LRC_API lrc_status lrc_verify_tropicalization_json(const lrc_cartan* a, const int* from,
                                                   const int* to, size_t length, size_t samples,
                                                   char** out);

/* Exact matrices */
LRC_API lrc_status lrc_matrix_from_json(const char* json, lrc_matrix** out);
LRC_API lrc_status lrc_matrix_from_word(const int* word, const char* const* params, size_t length,
                                        int n, lrc_matrix** out);
LRC_API void lrc_matrix_free(lrc_matrix* x);
LRC_API lrc_status lrc_matrix_to_json(const lrc_matrix* x, char** out);
LRC_API lrc_status lrc_matrix_minor(const lrc_matrix* x, const int* rows, const int* cols,
                                    size_t size, char** out);
LRC_API lrc_status lrc_matrix_is_totally_positive(const lrc_matrix* x, int* out);
LRC_API lrc_status lrc_matrix_boundary_parameters(const lrc_matrix* x, const int* word,
                                                  size_t length, char** t_first, char** t_last);
/* which is "dodgson" or "plucker". */
LRC_API lrc_status lrc_identity_sweep_json(const char* which, int n, size_t samples, uint64_t seed,
                                           char** out);

/* Seeds and cluster algebras */
LRC_API lrc_status lrc_seed_from_json(const char* json, lrc_seed** out);
/* Coefficient-free bipartite seed for a Cartan type. */
LRC_API lrc_status lrc_seed_from_cartan(const lrc_cartan* a, lrc_seed** out);
LRC_API lrc_status lrc_seed_grassmannian(int n, lrc_seed** out);
LRC_API void lrc_seed_free(lrc_seed* s);
LRC_API lrc_status lrc_seed_to_json(const lrc_seed* s, char** out);
LRC_API lrc_status lrc_seed_mutate(const lrc_seed* s, int k, lrc_seed** out);
/* The exchange relation at k, e.g. "x1*x1' = x2 + 1". */
LRC_API lrc_status lrc_seed_exchange_relation(const lrc_seed* s, int k, char** out);
/*
 * The following return LRC_ERR_RESOURCE when a cap is hit; *out then holds
 * the partial report.
 */
LRC_API lrc_status lrc_enumerate_clusters_json(const lrc_seed* s, size_t max_seeds,
                                               size_t max_terms, int list_variables, char** out);
LRC_API lrc_status lrc_laurent_check_json(const lrc_seed* s, int depth, size_t max_seeds,
                                          size_t max_terms, char** out);
LRC_API lrc_status lrc_finite_type_json(const lrc_seed* s, size_t max_class, char** out);
LRC_API lrc_status lrc_grassmannian_check_json(int n, char** out);

#ifdef __cplusplus
}
#endif

#endif
