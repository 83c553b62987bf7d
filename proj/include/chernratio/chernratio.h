// Copyright 2026 The chernratio Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the chernratio library.
 *
 * Every fallible call returns a cr_status; on failure a description is
 * available from cr_last_error() on the calling thread until the next call.
 * Exact rationals cross the boundary as "p/q" strings. Strings returned
 * through char** are owned by the caller and released with cr_string_free;
 * const char* values obtained from a handle live as long as the handle.
 */

#ifndef CHERNRATIO_H
#define CHERNRATIO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CHERNRATIO_BUILDING)
#    define CR_API __declspec(dllexport)
#  else
#    define CR_API __declspec(dllimport)
#  endif
#else
#  define CR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cr_status {
    CR_OK = 0,
    CR_ERR_CONSISTENCY = 1,
    CR_ERR_INVALID_TUPLE = 2,
    CR_ERR_RATIOS_UNDEFINED = 3,
    CR_ERR_NON_UNIT = 4,
    CR_ERR_INAPPLICABLE = 5,
    CR_ERR_PARAMETER = 6,
    CR_ERR_OVERFLOW = 7,
    CR_ERR_IO = 8,
    CR_ERR_INTERNAL = 9
} cr_status;

typedef enum cr_policy_mode { CR_POLICY_STRICT = 0, CR_POLICY_SLACK = 1, CR_POLICY_ASYMPTOTIC = 2 } cr_policy_mode;

typedef enum cr_format { CR_FORMAT_JSON = 0, CR_FORMAT_CSV = 1, CR_FORMAT_SVG = 2, CR_FORMAT_TEXT = 3 } cr_format;

typedef enum cr_family_kind { CR_FAMILY_CI_FIXED_S = 0, CR_FAMILY_CI_DIAGONAL = 1 } cr_family_kind;

/* Numerical profile of a 3-fold in P^5; s is meaningful only when has_s != 0. */
typedef struct cr_tuple {
    int64_t d;
    int64_t h2k;
    int64_t hk2;
    int64_t k3;
    int64_t chi;
    int64_t s;
    int has_s;
} cr_tuple;

typedef struct cr_chern_numbers {
    int64_t c1cubed;
    int64_t c1c2;
    int64_t c3;
} cr_chern_numbers;

/* NULL coefficient / exponent select the defaults 1 and 7/2. */
typedef struct cr_policy {
    cr_policy_mode mode;
    const char *coefficient;
    const char *exponent;
} cr_policy;

typedef struct cr_enumerate_options {
    cr_policy policy;
    int positivity;
    int asymptotic_bounds;
    unsigned threads; /* 0: one per hardware thread */
    int64_t d_limit;  /* <= 0: default of 60 */
} cr_enumerate_options;

typedef struct cr_report cr_report;
typedef struct cr_cloud cr_cloud;
typedef struct cr_trace cr_trace;

CR_API const char *cr_version(void);
CR_API const char *cr_last_error(void);
CR_API const char *cr_status_name(cr_status status);
CR_API void cr_string_free(char *s);

CR_API void cr_policy_default(cr_policy *out);
CR_API void cr_enumerate_options_default(cr_enumerate_options *out);

/* Invariants */
CR_API cr_status cr_tuple_validate(const cr_tuple *t);
CR_API cr_status cr_tuple_parse(const char *text, cr_tuple *out);
CR_API cr_status cr_tuple_to_json(const cr_tuple *t, char **out);
CR_API cr_status cr_chern_numbers_of(const cr_tuple *t, cr_chern_numbers *out);
CR_API cr_status cr_ratios_of(const cr_tuple *t, char **x, char **y);
CR_API cr_status cr_sectional_genus(const cr_tuple *t, int64_t *g);

/* Complete-intersection oracle */
CR_API cr_status cr_ci_invariants(int64_t a1, int64_t a2, cr_tuple *out);
CR_API cr_status cr_verify_dpf(int64_t a1, int64_t a2, int *all_match);

/* Constraints */
CR_API cr_status cr_check_all(const cr_tuple *t, int64_t s, const cr_policy *policy, int asymptotic_bounds,
                              cr_report **out);
CR_API size_t cr_report_size(const cr_report *r);
CR_API int cr_report_all_satisfied(const cr_report *r);
CR_API cr_status cr_report_entry(const cr_report *r, size_t i, const char **id, int *satisfied, const char **margin,
                                 const char **note);
/* JSON, CSV or TEXT */
CR_API cr_status cr_report_format(const cr_report *r, cr_format format, char **out);
CR_API void cr_report_free(cr_report *r);

CR_API cr_status cr_prop4_min_degree(int64_t s, int64_t *out);

/* Geography */
CR_API cr_status cr_enumerate(int64_t d_min, int64_t d_max, int64_t s, const cr_enumerate_options *options,
                              cr_cloud **out);
CR_API size_t cr_cloud_size(const cr_cloud *c);
CR_API cr_status cr_cloud_entry(const cr_cloud *c, size_t i, cr_tuple *out);
/* JSON, CSV or SVG */
CR_API cr_status cr_cloud_format(const cr_cloud *c, cr_format format, char **out);
CR_API void cr_cloud_free(cr_cloud *c);

/* s_fixed is ignored for the diagonal family. */
CR_API cr_status cr_trace_create(cr_family_kind kind, int64_t s_fixed, int64_t t_min, int64_t t_max,
                                 cr_trace **out);
CR_API size_t cr_trace_size(const cr_trace *tr);
/* defined is set to 0 when c1c2 == 0 at this point. */
CR_API cr_status cr_trace_point(const cr_trace *tr, size_t i, int64_t *t, cr_tuple *tuple, int *defined);
CR_API cr_status cr_trace_format(const cr_trace *tr, cr_format format, char **out);
CR_API void cr_trace_free(cr_trace *tr);

CR_API cr_status cr_write_file(const char *path, const char *contents);

#ifdef __cplusplus
}
#endif

#endif
