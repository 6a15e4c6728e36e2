/*
Copyright 2026 The sigmacong Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#ifndef SIGMACONG_SIGMACONG_H
#define SIGMACONG_SIGMACONG_H

/*
 * C interface to the sigmacong library: sum-of-divisors tables, exact
 * theta-series arithmetic, recurrence verifiers and congruence scanners.
 *
 * Conventions:
 *   - Every fallible call returns sc_status. On anything but SC_OK the
 *     output arguments are untouched and sc_last_error_message() describes
 *     the failure (thread-local, valid until the next failing call on the
 *     same thread).
 *   - Objects are opaque handles, created by *_create / producing calls and
 *     released with the matching *_destroy. Destroying NULL is a no-op.
 *     Handles are immutable after creation and may be read concurrently.
 *   - Strings are written into caller buffers: `needed` (if non-NULL)
 *     receives the length without the terminator; if `capacity` is too small
 *     the call returns SC_ERR_BUFFER_TOO_SMALL and writes nothing.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SIGMACONG_BUILDING)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_OUT_OF_RANGE = 2,
  SC_ERR_OVERFLOW = 3,
  SC_ERR_INEXACT_DIVISION = 4,
  SC_ERR_RESOURCE = 5,
  SC_ERR_BUFFER_TOO_SMALL = 6,
  SC_ERR_INTERNAL = 7
} sc_status;

typedef enum sc_identity {
  SC_IDENTITY_DIV1 = 0,
  SC_IDENTITY_DIV2 = 1,
  SC_IDENTITY_DIV3 = 2,
  SC_IDENTITY_TK = 3,
  SC_IDENTITY_GF = 4
} sc_identity;

typedef enum sc_scan_kind {
  SC_SCAN_MOD5 = 0,
  SC_SCAN_MOD4 = 1,
  SC_SCAN_CLASSIC3 = 2,
  SC_SCAN_CLASSIC4 = 3
} sc_scan_kind;

typedef enum sc_format { SC_FORMAT_CSV = 0, SC_FORMAT_JSON = 1, SC_FORMAT_PLAIN = 2 } sc_format;

typedef struct sc_sigma_table sc_sigma_table;
typedef struct sc_series sc_series;
typedef struct sc_tk_table sc_tk_table;
typedef struct sc_report sc_report;
typedef struct sc_scan_report sc_scan_report;

typedef void (*sc_progress_fn)(uint64_t done, uint64_t total, void* user);

/* threads = 0 is treated as 1. progress may be NULL; it is called on the
 * calling thread after every 100000 values of n. */
typedef struct sc_run_options {
  unsigned threads;
  sc_progress_fn progress;
  void* progress_user;
} sc_run_options;

SC_API const char* sc_version(void);
SC_API const char* sc_status_string(sc_status status);
SC_API const char* sc_last_error_message(void);

/* Caps: sigma tables hold at most SC_MAX_TABLE_LIMIT entries; series orders
 * are at most SC_MAX_SERIES_ORDER. */
#define SC_MAX_TABLE_LIMIT ((uint64_t)1 << 32)
#define SC_MAX_SERIES_ORDER ((size_t)10000000)

/* ---- divisor functions ------------------------------------------------ */

/* Trial division; n = 0 gives 0. */
SC_API uint64_t sc_divisor_sum(uint64_t n);
SC_API sc_status sc_sigma_odd(uint64_t n, uint64_t* out);
SC_API sc_status sc_sigma_even(uint64_t n, uint64_t* out);
/* sigma(n) - 4 sigma(n/2), with sigma(n/2) = 0 for odd n. */
SC_API sc_status sc_g_value(uint64_t n, int64_t* out);
SC_API sc_status sc_triangular(uint64_t j, uint64_t* out);
SC_API int sc_is_triangular(uint64_t n);
SC_API uint64_t sc_max_tri_index(uint64_t bound);

SC_API sc_status sc_sigma_table_create(uint64_t limit, sc_sigma_table** out);
/* Table over caller-supplied values[0..count-1]; values[0] must be 0 and
 * count >= 2. Entries are taken as given, so identities and scans run on
 * such a table check those values. */
SC_API sc_status sc_sigma_table_from_values(const uint64_t* values, size_t count, sc_sigma_table** out);
SC_API void sc_sigma_table_destroy(sc_sigma_table* table);
SC_API uint64_t sc_sigma_table_limit(const sc_sigma_table* table);
SC_API sc_status sc_sigma_table_get(const sc_sigma_table* table, uint64_t n, uint64_t* out);
SC_API sc_status sc_sigma_table_g(const sc_sigma_table* table, uint64_t n, int64_t* out);
/* Pointer to limit+1 values, values[0] = 0. Valid for the table's lifetime. */
SC_API const uint64_t* sc_sigma_table_data(const sc_sigma_table* table);

/* ---- truncated power series ------------------------------------------- */

/* Series of order count-1 with the given coefficients (count >= 1). */
SC_API sc_status sc_series_from_int64(const int64_t* coeffs, size_t count, sc_series** out);
SC_API sc_status sc_series_psi(size_t order, sc_series** out);
SC_API sc_status sc_series_psi_product(size_t order, sc_series** out);
SC_API sc_status sc_series_add(const sc_series* a, const sc_series* b, sc_series** out);
SC_API sc_status sc_series_mul(const sc_series* a, const sc_series* b, sc_series** out);
/* k = 0 yields the constant series 1. */
SC_API sc_status sc_series_pow(const sc_series* a, uint64_t k, sc_series** out);
SC_API sc_status sc_series_truncate(const sc_series* a, size_t order, sc_series** out);
SC_API void sc_series_destroy(sc_series* series);
SC_API size_t sc_series_order(const sc_series* series);
/* SC_ERR_OVERFLOW if the coefficient does not fit in int64_t. */
SC_API sc_status sc_series_coeff_i64(const sc_series* series, size_t i, int64_t* out);
/* Decimal representation, any size. */
SC_API sc_status sc_series_coeff_str(const sc_series* series, size_t i, char* buf, size_t capacity,
                                     size_t* needed);
SC_API int sc_series_equal(const sc_series* a, const sc_series* b);

/* t_k(n) for 0 <= n <= limit, k >= 1. */
SC_API sc_status sc_tk_table_create(uint32_t k, size_t limit, sc_tk_table** out);
SC_API void sc_tk_table_destroy(sc_tk_table* table);
SC_API uint32_t sc_tk_table_k(const sc_tk_table* table);
SC_API size_t sc_tk_table_limit(const sc_tk_table* table);
SC_API sc_status sc_tk_table_get_i64(const sc_tk_table* table, size_t n, int64_t* out);
SC_API sc_status sc_tk_table_get_str(const sc_tk_table* table, size_t n, char* buf, size_t capacity,
                                     size_t* needed);

/* ---- recurrences ------------------------------------------------------- */

/* Residual (lhs - rhs) of each identity at one n; zero when it holds.
 * SC_ERR_OVERFLOW if the residual does not fit in int64_t. */
SC_API sc_status sc_div1_residual(const sc_sigma_table* table, uint64_t n, int64_t* out);
SC_API sc_status sc_div2_residual(const sc_sigma_table* table, uint64_t n, int64_t* out);
SC_API sc_status sc_div3_residual(const sc_sigma_table* table, uint64_t n, int64_t* out);
SC_API sc_status sc_tk_recurrence_residual(const sc_tk_table* table, uint64_t n, int64_t* out);

/* Writes sigma(2n+1) for n = 0..limit_n into out[0..limit_n]; out_len must
 * be at least limit_n + 1. Uses the div1 recurrence only. */
SC_API sc_status sc_sigma_odd_via_div1(uint64_t limit_n, uint64_t* out, size_t out_len);

/* DIV1/DIV2/DIV3 need `table`, TK needs `tk`, GF needs neither. options may
 * be NULL. */
SC_API sc_status sc_batch_verify(sc_identity identity, uint64_t lo, uint64_t hi,
                                 const sc_sigma_table* table, const sc_tk_table* tk,
                                 const sc_run_options* options, sc_report** out);
SC_API sc_status sc_verify_gf_identity(uint64_t limit, sc_report** out);

typedef struct sc_failure {
  uint64_t n;
  char lhs[48]; /* decimal, NUL-terminated */
  char rhs[48];
  char residual[48];
} sc_failure;

SC_API void sc_report_destroy(sc_report* report);
SC_API sc_identity sc_report_identity(const sc_report* report);
SC_API uint64_t sc_report_lo(const sc_report* report);
SC_API uint64_t sc_report_hi(const sc_report* report);
SC_API uint64_t sc_report_checked_count(const sc_report* report);
SC_API size_t sc_report_failure_count(const sc_report* report);
SC_API sc_status sc_report_failure(const sc_report* report, size_t i, sc_failure* out);
SC_API sc_status sc_report_render(const sc_report* report, sc_format format, char* buf, size_t capacity,
                                  size_t* needed);

/* ---- congruences ------------------------------------------------------- */

/* Unreduced sums; SC_ERR_OVERFLOW if they do not fit in uint64_t. */
SC_API sc_status sc_mod5_sum(const sc_sigma_table* table, uint64_t n, uint64_t* out);
SC_API sc_status sc_mod4_sum(const sc_sigma_table* table, uint64_t n, uint64_t* out);
/* *div3 = 3 | sigma(3n+2), *div4 = 4 | sigma(4n+3). */
SC_API sc_status sc_classic_check(const sc_sigma_table* table, uint64_t n, int* div3, int* div4);

SC_API sc_status sc_scan(sc_scan_kind kind, uint64_t lo, uint64_t hi, const sc_sigma_table* table,
                         const sc_run_options* options, sc_scan_report** out);

typedef struct sc_violation {
  uint64_t n;
  char sum[48];
  uint32_t residue;
} sc_violation;

SC_API void sc_scan_report_destroy(sc_scan_report* report);
SC_API sc_scan_kind sc_scan_report_kind(const sc_scan_report* report);
SC_API uint32_t sc_scan_report_modulus(const sc_scan_report* report);
SC_API uint64_t sc_scan_report_checked_count(const sc_scan_report* report);
SC_API uint64_t sc_scan_report_excluded_count(const sc_scan_report* report);
SC_API size_t sc_scan_report_violation_count(const sc_scan_report* report);
SC_API sc_status sc_scan_report_violation(const sc_scan_report* report, size_t i, sc_violation* out);
/* Number of excluded n whose sum is congruent to `residue`. */
SC_API uint64_t sc_scan_report_histogram(const sc_scan_report* report, uint32_t residue);
SC_API sc_status sc_scan_report_render(const sc_scan_report* report, sc_format format, char* buf,
                                       size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* SIGMACONG_SIGMACONG_H */
