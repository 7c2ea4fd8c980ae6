/* Copyright 2026 The mulmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the mulmap library.
 *
 * Objects are opaque handles. Every fallible call returns an mm_status and
 * leaves a message in the context (mm_last_error). Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * mm_string_free. Structured results are JSON documents. */

#ifndef MULMAP_MULMAP_H_
#define MULMAP_MULMAP_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MM_OK = 0,
  MM_ERR_OTHER = 1,
  MM_ERR_PARSE = 2,
  MM_ERR_DIMENSION = 3, /* dimension or field mismatch */
  MM_ERR_NOT_MULTIPLICATIVE = 4,
  MM_ERR_VERIFICATION = 5,
  MM_ERR_UNSUPPORTED = 6
} mm_status;

typedef struct mm_context mm_context;
typedef struct mm_matrix mm_matrix;
typedef struct mm_expr mm_expr;

mm_context* mm_context_create(void);
void mm_context_destroy(mm_context* ctx);
void mm_context_set_seed(mm_context* ctx, uint64_t seed);
void mm_context_set_samples(mm_context* ctx, size_t samples);
/* "rational" or "quadratic:<d>". */
mm_status mm_context_set_field(mm_context* ctx, const char* field);

/* Valid until the next call on ctx. Empty after success. */
const char* mm_last_error(const mm_context* ctx);
/* Library error name, e.g. "NotMultiplicative". */
const char* mm_last_error_code(const mm_context* ctx);
/* Machine-readable payload (a JSON counterexample) or "". */
const char* mm_last_error_detail(const mm_context* ctx);

mm_status mm_matrix_from_json(mm_context* ctx, const char* json, mm_matrix** out);
mm_status mm_matrix_to_json(mm_context* ctx, const mm_matrix* m, char** out);
/* Zero n x n matrix over the context field. */
mm_status mm_matrix_zero(mm_context* ctx, size_t n, mm_matrix** out);
size_t mm_matrix_dim(const mm_matrix* m);
/* 0-based entry access; scalars use the text grammar "a", "a+b*s". */
mm_status mm_matrix_get(mm_context* ctx, const mm_matrix* m, size_t i, size_t j, char** out);
mm_status mm_matrix_set(mm_context* ctx, mm_matrix* m, size_t i, size_t j, const char* value);
void mm_matrix_free(mm_matrix* m);

mm_status mm_expr_from_json(mm_context* ctx, const char* json, mm_expr** out);
void mm_expr_free(mm_expr* e);

mm_status mm_eval(mm_context* ctx, const mm_expr* e, const mm_matrix* a, mm_matrix** out);
/* Canonical form document. */
mm_status mm_simplify(mm_context* ctx, const mm_expr* e, char** out);

/* Classification reports. Builtins: "identity", "cofactor", "adjugate",
 * "shift" (A + I), "det-cubed" (A -> det(A)^3 I_{n-1}). */
mm_status mm_classify(mm_context* ctx, const mm_expr* e, char** out);
mm_status mm_classify_builtin(mm_context* ctx, const char* name, size_t n, char** out);

/* Writes Phi(in) into the preallocated k x k zero matrix `out`; returns 0 on
 * success. */
typedef int (*mm_oracle_fn)(void* user, const mm_matrix* in, mm_matrix* out);
mm_status mm_classify_callback(mm_context* ctx, size_t n, size_t k, mm_oracle_fn fn, void* user,
                               char** out);

/* {"gens": [...]} for det 1, otherwise {"detScalar": ..., "gens": [...]}
 * with A = D_1(detScalar) * product(gens). */
mm_status mm_decompose(mm_context* ctx, const mm_matrix* a, char** out);

/* Verdict document. With g == NULL checks multiplicativity of f, otherwise
 * f == g. */
mm_status mm_verify(mm_context* ctx, const mm_expr* f, const mm_expr* g, char** out);
mm_status mm_verify_builtin(mm_context* ctx, const char* name, size_t n, char** out);

/* Seeded samples: kind is "sl", "gl", "unitriangular", "singular" (matrix
 * document) or "expr" (expression document). */
mm_status mm_generate(mm_context* ctx, const char* kind, size_t n, char** out);

void mm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MULMAP_MULMAP_H_ */
