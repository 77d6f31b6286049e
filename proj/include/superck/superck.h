/* C interface to the superspace Clifford analysis engine.
 *
 * Every object is an opaque handle; every call returns a status code and
 * reports details through sck_last_error(). Strings returned through char**
 * are heap-allocated and released with sck_string_free().
 *
 * The standard signature layout is: block "x" with m commuting and 2n
 * anticommuting coordinates, an orthogonal block "y" (p, 2q), a block "w"
 * sharing x's Clifford generators, and the scalar variable x0.
 */
#ifndef SUPERCK_H
#define SUPERCK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sck_status {
    SCK_OK = 0,
    SCK_ERROR_INVALID_ARGUMENT = 1,
    SCK_ERROR_PARSE = 2,
    SCK_ERROR_DOMAIN = 3,
    SCK_ERROR_INTERNAL = 4
} sck_status;

typedef struct sck_signature sck_signature;
typedef struct sck_element sck_element;

/* Thread-local message describing the most recent failure. */
const char* sck_last_error(void);
void sck_string_free(char* s);

sck_status sck_signature_create(int m, int n, int p, int q, sck_signature** out);
void sck_signature_free(sck_signature* sig);

/* Expression language: rationals, x0, x<i>/y<i>/w<i>, xg<i>/yg<i>/wg<i>,
 * e<i>/eg<i>, sqrtpi, logx0, X(block), IP(a,b), NORM2(block), + - * / ^. */
sck_status sck_parse(const sck_signature* sig, const char* text, sck_element** out);
sck_status sck_render(const sck_element* e, char** out);
void sck_element_free(sck_element* e);

sck_status sck_add(const sck_element* a, const sck_element* b, sck_element** out);
sck_status sck_mul(const sck_element* a, const sck_element* b, sck_element** out);
/* 1 equal, 0 different, -1 on error */
int sck_equal(const sck_element* a, const sck_element* b);

sck_status sck_derive(const sck_element* e, const char* var, sck_element** out);
sck_status sck_dirac(const sck_element* e, const char* block, sck_element** out);
sck_status sck_laplacian(const sck_element* e, const char* block, sck_element** out);
sck_status sck_euler(const sck_element* e, const char* block, sck_element** out);

/* mode: "pizzetti" | "oracle" | "normalized" | "berezin" */
sck_status sck_integrate(const sck_element* e, const char* block, const char* mode,
                         sck_element** out);

/* Monogenic extension of f0 (and optionally f2k1 when M = -2k) off the
 * hyperplane of the given parameter ("x0" or a block name); returns the
 * series as JSON {case, block, terms: [{j, element}]}. */
sck_status sck_ck_extend(const sck_signature* sig, const char* block, const char* param,
                         const sck_element* f0, const sck_element* f2k1, char** json_out);

/* Plane-wave decomposition of the same extension, materialized. */
sck_status sck_pw_decompose(const sck_signature* sig, const char* block, const char* wblock,
                            const char* param, const sck_element* f0, const sck_element* f2k1,
                            sck_element** out);

/* form: "fraction" | "series" (n_trunc = series degree) */
sck_status sck_cauchy_kernel(const sck_signature* sig, const char* block, const char* form,
                             int n_trunc, sck_element** out);

/* Verification suites. full_grid != 0 runs the standard grid and ignores
 * m,n,p,q; json_format selects the report encoding. all_pass may be NULL. */
sck_status sck_run_suite(const char* suite, int m, int n, int p, int q, int full_grid,
                         uint64_t seed, int degree, int json_format, char** report,
                         int* all_pass);
/* NULL-terminated list of suite names. */
const char* const* sck_suite_names(void);
/* Validates a JSON report against the shipped schema; on failure fills
 * error_out (when non-NULL). Returns SCK_OK for valid reports. */
sck_status sck_validate_report(const char* json, char** error_out);

#ifdef __cplusplus
}
#endif

#endif /* SUPERCK_H */
