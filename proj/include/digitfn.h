/* digitfn: q-quasiadditive and q-quasimultiplicative digital functions.
 *
 * C89-compatible interface to the shared library. All functions return a
 * digitfn_status; outputs are delivered through out-parameters. Strings and
 * arrays returned by the library are owned by the caller and must be released
 * with digitfn_string_free / digitfn_u64_free. Objects live behind opaque
 * handles with explicit close functions. Check reports are JSON text with a
 * stable key order; the overall verdict is in their "ok" field and is also
 * returned through the ok out-parameter where present.
 */

#ifndef DIGITFN_H
#define DIGITFN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define DIGITFN_API __declspec(dllexport)
#else
#define DIGITFN_API __attribute__((visibility("default")))
#endif

typedef enum digitfn_status {
  DIGITFN_OK = 0,
  DIGITFN_ERR_INVALID_ARGUMENT = 1,
  DIGITFN_ERR_UNSUPPORTED_BLOCK = 2,
  DIGITFN_ERR_DOMAIN = 3,
  DIGITFN_ERR_COMPOSITION = 4,
  DIGITFN_ERR_NOT_CANONICAL = 5,
  DIGITFN_ERR_MINIMIZATION_CONFLICT = 6,
  DIGITFN_ERR_SINGULAR = 7,
  DIGITFN_ERR_DISCONNECTED = 8,
  DIGITFN_ERR_PARSE = 9,
  DIGITFN_ERR_UNKNOWN_FUNCTION = 10,
  DIGITFN_ERR_VERIFICATION_FAILED = 11,
  DIGITFN_ERR_CONVERGENCE = 12,
  DIGITFN_ERR_INTERNAL = 100
} digitfn_status;

typedef struct digitfn_function digitfn_function;
typedef struct digitfn_rep digitfn_rep;
typedef struct digitfn_transducer digitfn_transducer;

DIGITFN_API const char* digitfn_version(void);
DIGITFN_API const char* digitfn_status_name(digitfn_status s);
/* Detail message of the most recent failure on this thread. */
DIGITFN_API const char* digitfn_last_error(void);

DIGITFN_API void digitfn_string_free(char* s);
DIGITFN_API void digitfn_u64_free(uint64_t* p);

/* ---- function catalog ------------------------------------------------- */

/* Names: block-count:<digits>, gray-runs, adjusted-gray, naf-weight,
 * opt-reps, rlt:jacobsthal, pow-digit-sum, naf-exp. */
DIGITFN_API digitfn_status digitfn_function_open(const char* name, digitfn_function** out);
DIGITFN_API void digitfn_function_close(digitfn_function* f);

DIGITFN_API digitfn_status digitfn_function_info(const digitfn_function* f, unsigned* q, unsigned* r,
                                                 int* multiplicative, char** summary);

/* Value as "p/q" (exact) or a 9-significant-digit decimal (real). */
DIGITFN_API digitfn_status digitfn_function_eval(const digitfn_function* f, uint64_t n, char** value);
/* Evaluation through the block-splitting decomposition. */
DIGITFN_API digitfn_status digitfn_function_eval_split(const digitfn_function* f, uint64_t n,
                                                       char** value);

/* NAF digits of n, 'T' for -1 (e.g. 27 -> "100T0T"). */
DIGITFN_API digitfn_status digitfn_naf(uint64_t n, char** out);

/* ---- splitting and the B-set ------------------------------------------ */

DIGITFN_API digitfn_status digitfn_split(uint64_t n, unsigned q, unsigned r, uint64_t** blocks,
                                         uint64_t** reduced, size_t* count);

DIGITFN_API digitfn_status digitfn_bset(unsigned q, unsigned r, unsigned max_len,
                                        uint64_t** members, size_t* count);

/* ---- functional equation check ----------------------------------------- */

/* Report JSON: {"fn", "q", "r", "mode", "a_max", "k_max", "ok",
 *               "counterexample": {"a","k","b","lhs","rhs"} when !ok}.
 * r_override / mode_override ("additive" | "multiplicative" | NULL) replace
 * the catalog parameters. */
DIGITFN_API digitfn_status digitfn_check_quasi(const digitfn_function* f, uint64_t a_max,
                                               unsigned k_max, int r_override,
                                               const char* mode_override, int* ok,
                                               char** report_json);

/* ---- linear representations -------------------------------------------- */

DIGITFN_API digitfn_status digitfn_rep_open_file(const char* path, digitfn_rep** out);
DIGITFN_API digitfn_status digitfn_rep_open_json(const char* json_text, digitfn_rep** out);
/* Built-in representation of a catalog function, when it has one. */
DIGITFN_API digitfn_status digitfn_rep_open_builtin(const digitfn_function* f, digitfn_rep** out);
DIGITFN_API void digitfn_rep_close(digitfn_rep* r);

DIGITFN_API digitfn_status digitfn_rep_dimension(const digitfn_rep* r, size_t* dim);
DIGITFN_API digitfn_status digitfn_rep_eval(const digitfn_rep* r, uint64_t n, char** value);
DIGITFN_API digitfn_status digitfn_rep_is_zero_insensitive(const digitfn_rep* r, int* flag);
DIGITFN_API digitfn_status digitfn_rep_minimize(const digitfn_rep* r, digitfn_rep** out);
DIGITFN_API digitfn_status digitfn_rep_to_json(const digitfn_rep* r, char** json_text);

/* M_0^r = v u^t test. raw != 0 skips canonicalization (minimize +
 * zero-insensitivity re-check) and tests the representation as given. */
DIGITFN_API digitfn_status digitfn_check_regular_mult(const digitfn_rep* r, unsigned param_r,
                                                      int raw, int* ok, char** report_json);

/* Four-condition quasiadditivity test on a zero-insensitive representation. */
DIGITFN_API digitfn_status digitfn_check_regular_add(const digitfn_rep* r, unsigned param_r,
                                                     int* ok, char** report_json);

/* ---- transducers -------------------------------------------------------- */

DIGITFN_API digitfn_status digitfn_transducer_open_file(const char* path, digitfn_transducer** out);
DIGITFN_API digitfn_status digitfn_transducer_open_json(const char* json_text,
                                                        digitfn_transducer** out);
DIGITFN_API void digitfn_transducer_close(digitfn_transducer* t);

DIGITFN_API digitfn_status digitfn_transducer_eval(const digitfn_transducer* t, uint64_t n,
                                                   char** value);
DIGITFN_API digitfn_status digitfn_check_transducer(const digitfn_transducer* t, unsigned param_r,
                                                    int* ok, char** report_json);

/* ---- central limit constants ------------------------------------------- */

typedef struct digitfn_constants_opts {
  int exact;        /* exact rational pipeline (needs an additive representation) */
  unsigned truncate_L; /* truncation length for the numeric pipeline (0 = default) */
  int tail;         /* tail extrapolation on/off for the numeric pipeline */
} digitfn_constants_opts;

/* Report JSON: {"fn", "q", "r", "mode", "provenance", "mu", "sigma2", ...};
 * exact values are "p/q" strings, numeric ones JSON numbers. */
DIGITFN_API digitfn_status digitfn_constants(const digitfn_function* f,
                                             const digitfn_constants_opts* opts,
                                             char** report_json);

/* -q * alpha'(0) by central differences (step 1e-4) for the singularity
 * alpha(t) of 1 - x - x^r B(x,t). */
DIGITFN_API digitfn_status digitfn_singularity_mean(const digitfn_function* f, unsigned truncate_L,
                                                    int tail, double* mu_out);

/* ---- distribution experiments ------------------------------------------ */

/* Report JSON: {"fn", "k", "count", "mean", "variance", "ks_distance",
 *               "degenerate", "histogram": [[value, count], ...]}. */
DIGITFN_API digitfn_status digitfn_experiment(const digitfn_function* f, unsigned k, unsigned jobs,
                                              char** report_json);

/* ---- generating function identity --------------------------------------- */

/* Checks [x^k] F(x,t) against direct power sums for each integer t in ts,
 * k <= L - r; exact arithmetic. */
DIGITFN_API digitfn_status digitfn_gf_check(const digitfn_function* f, unsigned L, const long* ts,
                                            size_t ts_count, int* ok, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DIGITFN_H */
