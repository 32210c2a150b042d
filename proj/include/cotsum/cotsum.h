/* Copyright 2026 The cotsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COTSUM_COTSUM_H
#define COTSUM_COTSUM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define COTSUM_API __declspec(dllexport)
#else
#define COTSUM_API __attribute__((visibility("default")))
#endif

typedef enum cotsum_status {
  COTSUM_OK = 0,
  COTSUM_ERR_INVALID_ARGUMENT = 1,
  COTSUM_ERR_PARSE = 2,
  COTSUM_ERR_DIVISION_BY_ZERO = 3,
  COTSUM_ERR_ZERO_CONSTANT_TERM = 4,
  COTSUM_ERR_NONZERO_INNER_CONSTANT = 5,
  COTSUM_ERR_POLE_AT_ORIGIN = 6,
  COTSUM_ERR_BAD_DIMENSION = 7,
  COTSUM_ERR_NON_REAL_VALUE = 8,
  COTSUM_ERR_SINGULAR_ALPHA = 9,
  COTSUM_ERR_BAD_K = 10,
  COTSUM_ERR_BAD_N = 11,
  COTSUM_ERR_TOO_LARGE = 12,
  COTSUM_ERR_PARITY_MISMATCH = 13,
  COTSUM_ERR_INTERNAL = 14,
  COTSUM_ERR_BUFFER_TOO_SMALL = 15,
  COTSUM_ERR_OUT_OF_MEMORY = 16
} cotsum_status;

typedef enum cotsum_format {
  COTSUM_FORMAT_TEXT = 0,
  COTSUM_FORMAT_JSON = 1,
  COTSUM_FORMAT_CSV = 2
} cotsum_format;

/* Result of one computation, rendered on demand. */
typedef struct cotsum_report cotsum_report;

COTSUM_API const char* cotsum_version(void);
COTSUM_API const char* cotsum_status_string(cotsum_status status);
/* Message of the last failure on the calling thread; empty after success. */
COTSUM_API const char* cotsum_last_error(void);

/* cot is a rational string "p/q"; methods is "all" or a comma list of
 * trace, closed, faa, genfun, float. */
COTSUM_API cotsum_status cotsum_sum(int m, int n, const char* cot, const char* methods, cotsum_report** out);
COTSUM_API cotsum_status cotsum_sum_alpha(int m, int n, double alpha, cotsum_report** out);
COTSUM_API cotsum_status cotsum_poly(int m, int n, cotsum_report** out);
/* kind: tangent, arctan, euler, bernoulli, stirling2, derivpoly, tanpoly.
 * method (derivpoly only, may be NULL): recursion, explicit, tangent_expansion. */
COTSUM_API cotsum_status cotsum_seq(const char* kind, int max_n, const char* method, cotsum_report** out);
/* kind: F, Q, MB. cot is used by F, method (may be NULL) by Q. */
COTSUM_API cotsum_status cotsum_genfun(const char* kind, int n, int order, const char* cot, const char* method,
                                       cotsum_report** out);
/* kind: dyck, trees, forest, dtable. */
COTSUM_API cotsum_status cotsum_comb(const char* kind, int n, int m, int k, int list, cotsum_report** out);
COTSUM_API cotsum_status cotsum_zeta(int k, const int* ns, size_t count, cotsum_report** out);
/* suite: all, sums, sequences, combinatorics, genfun. *passed receives 1 or 0. */
COTSUM_API cotsum_status cotsum_verify(const char* suite, int max_m, int max_n, int* passed, cotsum_report** out);

/* Nonzero when the report's checks or method comparisons all agree. */
COTSUM_API int cotsum_report_ok(const cotsum_report* report);
/* Allocates *text; release it with cotsum_string_free. */
COTSUM_API cotsum_status cotsum_report_render(const cotsum_report* report, cotsum_format format, char** text);
COTSUM_API void cotsum_report_free(cotsum_report* report);
COTSUM_API void cotsum_string_free(char* text);

/* Exact Tr((cJ + B)^m) as "p/q". When buf is too small the required size,
 * including the terminator, is stored in *needed and
 * COTSUM_ERR_BUFFER_TOO_SMALL is returned. */
COTSUM_API cotsum_status cotsum_s_exact(int m, int n, const char* cot, char* buf, size_t size, size_t* needed);
COTSUM_API cotsum_status cotsum_s_float(int m, int n, double alpha, double* out);

#ifdef __cplusplus
}
#endif

#endif /* COTSUM_COTSUM_H */
