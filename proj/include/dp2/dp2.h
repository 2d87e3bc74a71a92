// Copyright 2026 The dp2 Authors
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

#include "dp2/verdict.h"
/* C interface to the dp2 library.
 *
 * Every call returns a dp2_status.  Strings handed out through char** are
 * owned by the caller and released with dp2_string_free.  After a failure,
 * dp2_last_error(ctx) holds a message until the next call on ctx.  A context
 * must not be used by two threads at once.
 */

#ifndef DP2_DP2_H_
#define DP2_DP2_H_

#include <stdint.h>

#if defined(DP2_BUILDING_LIBRARY)
#define DP2_API __attribute__((visibility("default")))
#else
#define DP2_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dp2_status {
  DP2_OK = 0,
  DP2_ERR_INVALID_ARGUMENT = 1,
  DP2_ERR_BUDGET_EXCEEDED = 2,
  DP2_ERR_NOT_AN_ISOMETRY = 3,
  DP2_ERR_SIZE_CAP_EXCEEDED = 4,
  DP2_ERR_UNSUPPORTED = 5,
  DP2_ERR_CONSISTENCY = 6,
  DP2_ERR_IO = 7,
  DP2_ERR_PARSE = 8,
  DP2_ERR_INTERNAL = 9
} dp2_status;

typedef enum dp2_search_outcome {
  DP2_SEARCH_FOUND = 0,
  DP2_SEARCH_EXHAUSTED = 1,
  DP2_SEARCH_BUDGET_EXCEEDED = 2
} dp2_search_outcome;

typedef struct dp2_context dp2_context;

DP2_API const char* dp2_version(void);
DP2_API const char* dp2_status_name(dp2_status status);

/* cache_dir may be NULL (no disk cache).  memory_budget 0 means 1 GiB;
 * threads < 1 means 1. */
DP2_API dp2_status dp2_context_create(const char* cache_dir, uint64_t memory_budget, int threads,
                                      dp2_context** out);
DP2_API void dp2_context_destroy(dp2_context* ctx);
DP2_API const char* dp2_last_error(const dp2_context* ctx);
DP2_API void dp2_string_free(char* s);

/* Loads the class table from the cache or builds it.  Every table-backed
 * call below does this on first use. *loaded_from_cache may be NULL. */
DP2_API dp2_status dp2_load_table(dp2_context* ctx, int* loaded_from_cache);

/* format: "json" or "csv". */
DP2_API dp2_status dp2_table(dp2_context* ctx, const char* format, char** out);

/* 64 integers in row-major order; column j is the image of basis vector j
 * in the basis (L, E1..E7). */
DP2_API dp2_status dp2_classify(dp2_context* ctx, const int64_t matrix[64], int* class_id);

DP2_API dp2_status dp2_zeta(dp2_context* ctx, int class_id, uint64_t q, int dmax, char** out_json);

/* Witnesses are written to witness_dir/type<id>_q<q>.json when witness_dir
 * is non-NULL.  format: "json" or "csv". */
DP2_API dp2_status dp2_verdicts(dp2_context* ctx, uint64_t q, const char* format, const char* witness_dir,
                                char** out);

/* node_budget 0 means the library default.  *out_json is the witness for
 * DP2_SEARCH_FOUND and a report object otherwise. */
DP2_API dp2_status dp2_search(dp2_context* ctx, const char* pattern, uint64_t q, uint64_t node_budget,
                              dp2_search_outcome* outcome, char** out_json);
DP2_API dp2_status dp2_verify_witness(dp2_context* ctx, const char* witness_json, int* ok, char** detail);

/* equation: "coeff,e0,e1,e2,e3" lines over F_{p^m}.  Reports every rational
 * point with its Eckardt analysis. */
DP2_API dp2_status dp2_verify_cubic(dp2_context* ctx, const char* equation, uint64_t p, int m, char** out_json);

/* Plane curve "coeff,e0,e1,e2" lines; point as "x:y:z" over F_{p^m}. */
DP2_API dp2_status dp2_singularity(dp2_context* ctx, const char* equation, uint64_t p, int m, const char* point,
                                   char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DP2_DP2_H_ */
