#ifndef CAPELLI_CAPELLI_H
#define CAPELLI_CAPELLI_H

/* C interface to the capelli library.
 *
 * Partitions are passed as "a,b" with a >= b >= 0 and rationals as "p/q" or integers.
 * Every string handed out through a char** parameter is owned by the caller and must
 * be released with capelli_string_free. On failure a function returns a nonzero
 * status, leaves its outputs untouched and records a message readable through
 * capelli_last_error on the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(CAPELLI_BUILDING)
#define CAPELLI_API __declspec(dllexport)
#else
#define CAPELLI_API __declspec(dllimport)
#endif
#else
#define CAPELLI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum capelli_status {
  CAPELLI_OK = 0,
  CAPELLI_ERR_INVALID = 1,
  CAPELLI_ERR_DOMAIN = 2,
  CAPELLI_ERR_POLE = 3,
  CAPELLI_ERR_INTERNAL = 4,
  CAPELLI_ERR_IO = 5,
  CAPELLI_ERR_CAP = 6
} capelli_status;

typedef enum capelli_style { CAPELLI_STYLE_PRETTY = 0, CAPELLI_STYLE_ASCII = 1 } capelli_style;

typedef enum capelli_basis { CAPELLI_BASIS_MONOMIAL = 0, CAPELLI_BASIS_FALLING = 1 } capelli_basis;

/* Which piece of P_lambda to return at an integer parameter k. FULL fails with
 * CAPELLI_ERR_POLE when lambda is k-singular. */
typedef enum capelli_part { CAPELLI_PART_FULL = 0, CAPELLI_PART_REG = 1, CAPELLI_PART_SING = 2 } capelli_part;

typedef enum capelli_route {
  CAPELLI_ROUTE_A = 0,
  CAPELLI_ROUTE_B = 1,
  CAPELLI_ROUTE_C = 2,
  CAPELLI_ROUTE_D = 3,
  CAPELLI_ROUTE_ORACLE = 4,
  /* the first applicable closed-form route */
  CAPELLI_ROUTE_DEFAULT = 5
} capelli_route;

typedef enum capelli_report_format {
  CAPELLI_REPORT_TEXT = 0,
  CAPELLI_REPORT_JSON = 1,
  CAPELLI_REPORT_CSV = 2
} capelli_report_format;

typedef struct capelli_poly capelli_poly;
typedef struct capelli_verify_options capelli_verify_options;
typedef struct capelli_report capelli_report;

CAPELLI_API const char* capelli_version(void);
CAPELLI_API const char* capelli_status_name(capelli_status status);
/* Message of the last failure on this thread, "" if none. Valid until the next call. */
CAPELLI_API const char* capelli_last_error(void);
CAPELLI_API void capelli_string_free(char* s);

/* Polynomials */
CAPELLI_API void capelli_poly_free(capelli_poly* p);
CAPELLI_API capelli_status capelli_poly_render(const capelli_poly* p, capelli_basis basis, capelli_style style,
                                               char** out);
/* Total degree; -1 for the zero polynomial. */
CAPELLI_API capelli_status capelli_poly_degree(const capelli_poly* p, int* out);
/* *out = 1 when both hold the same polynomial over the same coefficient field. */
CAPELLI_API capelli_status capelli_poly_equal(const capelli_poly* a, const capelli_poly* b, int* out);
/* Value at (x, y). Coefficients in Q(kappa) yield a rational function in kappa. */
CAPELLI_API capelli_status capelli_poly_eval(const capelli_poly* p, const char* x, const char* y,
                                             capelli_style style, char** out);

/* Knop-Sahi polynomials: over Q(kappa), or a part of the specialization at kappa = k. */
CAPELLI_API capelli_status capelli_ks(const char* lambda, capelli_poly** out);
CAPELLI_API capelli_status capelli_ks_part(const char* lambda, int k, capelli_part part, capelli_poly** out);
/* Comma-separated k in [0, k_max] where P_lambda has a pole, "" if none. */
CAPELLI_API capelli_status capelli_ks_poles(const char* lambda, int k_max, char** out);

/* Partitions */
/* "regular", "quasiregular" or "singular". */
CAPELLI_API capelli_status capelli_classify(const char* lambda, int k, char** out);
/* "a,b" or "" when lambda has no partner. */
CAPELLI_API capelli_status capelli_dagger(const char* lambda, int k, char** out);
/* Partitions of size d in graded order, separated by ';'. */
CAPELLI_API capelli_status capelli_partitions(int d, char** out);

/* Capelli eigenvalue polynomials */
CAPELLI_API capelli_status capelli_eig(const char* lambda, int k, capelli_route route, capelli_poly** out);
/* Comma-separated names of the closed-form routes applicable to lambda at k. */
CAPELLI_API capelli_status capelli_eig_routes(const char* lambda, int k, char** out);
/* *agree = 1 when every applicable route equals the interpolation oracle. */
CAPELLI_API capelli_status capelli_eig_routes_agree(const char* lambda, int k, int* agree);
/* Semisimple and nilpotent coefficients of the Capelli operator of lambda on the block of mu. */
CAPELLI_API capelli_status capelli_restriction_pair(const char* lambda, const char* mu, int k, char** d,
                                                    char** dprime);

/* Categorical dimension t */
CAPELLI_API capelli_status capelli_deligne_eig(const char* lambda, const char* t, capelli_poly** out);
/* Blocks of size d as "[(2,0), (1,1)x2]"; the pretty style uses a multiplication sign. */
CAPELLI_API capelli_status capelli_deligne_blocks(int d, const char* t, capelli_style style, char** out);
/* Minimal polynomial of the Casimir on degree-d symmetric powers, in the variable c. */
CAPELLI_API capelli_status capelli_min_poly(int d, const char* t, capelli_style style, char** out);

/* Verification sweeps */
CAPELLI_API capelli_verify_options* capelli_verify_options_new(void);
CAPELLI_API void capelli_verify_options_free(capelli_verify_options* o);
CAPELLI_API capelli_status capelli_verify_options_set_suite(capelli_verify_options* o, const char* suite);
/* name is one of k_max, size_max, d_max, N_max, a_max, bcd_max. */
CAPELLI_API capelli_status capelli_verify_options_set_bound(capelli_verify_options* o, const char* name, int value);
/* Comma-separated rationals. */
CAPELLI_API capelli_status capelli_verify_options_set_t_list(capelli_verify_options* o, const char* list);
/* 0 = available parallelism */
CAPELLI_API capelli_status capelli_verify_options_set_jobs(capelli_verify_options* o, unsigned jobs);
/* name is one of size, N, k, dougall. */
CAPELLI_API capelli_status capelli_verify_options_set_cap(capelli_verify_options* o, const char* name, int value);
/* Space-separated suite names accepted by set_suite. */
CAPELLI_API const char* capelli_verify_suites(void);

CAPELLI_API capelli_status capelli_verify(const capelli_verify_options* o, capelli_report** out);
CAPELLI_API void capelli_report_free(capelli_report* r);
CAPELLI_API capelli_status capelli_report_counts(const capelli_report* r, size_t* total, size_t* passed,
                                                 size_t* failed);
CAPELLI_API capelli_status capelli_report_format_as(const capelli_report* r, capelli_report_format format,
                                                    char** out);

#ifdef __cplusplus
}
#endif

#endif
