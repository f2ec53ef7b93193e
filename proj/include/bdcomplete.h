/*
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

/*
 * C interface to the block-diagonal completion library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a bdc_status;
 * on failure the output arguments are left untouched and
 * bdc_last_error_message() describes the failure for the calling thread.
 */

#ifndef BDCOMPLETE_H
#define BDCOMPLETE_H

#include <stddef.h>
#include <stdint.h>

#if defined(BDC_BUILDING_LIBRARY)
#define BDC_API __attribute__((visibility("default")))
#else
#define BDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdc_status {
  BDC_OK = 0,
  BDC_ERR_SYNTAX = 1,
  BDC_ERR_NON_PRIME_MODULUS = 2,
  BDC_ERR_UNSUPPORTED_MODULUS = 3,
  BDC_ERR_DIVISION_BY_ZERO = 4,
  BDC_ERR_FIELD_MISMATCH = 5,
  BDC_ERR_RANK_TOO_LARGE = 6,
  BDC_ERR_ODD_RANK = 7,
  BDC_ERR_NON_SQUARE = 8,
  BDC_ERR_INDEX_OUT_OF_RANGE = 9,
  BDC_ERR_SIZE_MISMATCH = 10,
  BDC_ERR_NOT_SYMMETRIC = 11,
  BDC_ERR_NOT_ANTISYMMETRIC = 12,
  BDC_ERR_CHARACTERISTIC_TWO = 13,
  BDC_ERR_SINGULAR_TRANSFORM = 14,
  BDC_ERR_EMPTY_BLOCK_LIST = 15,
  BDC_ERR_STRUCTURE_VIOLATION = 16,
  BDC_ERR_BUDGET_EXCEEDED = 17,
  BDC_ERR_NON_FINITE_FIELD = 18,
  BDC_ERR_UNSUPPORTED_TARGET = 19,
  BDC_ERR_INVALID_ARGUMENT = 20,
  BDC_ERR_INTERNAL = 21
} bdc_status;

typedef enum bdc_target { BDC_TARGET_MIN = 0, BDC_TARGET_MAX = 1 } bdc_target;

typedef enum bdc_canon_kind { BDC_CANON_SYMMETRIC = 0, BDC_CANON_SKEW = 1 } bdc_canon_kind;

typedef enum bdc_generator { BDC_GEN_T = 0, BDC_GEN_E = 1, BDC_GEN_R = 2 } bdc_generator;

typedef struct bdc_partial bdc_partial;
typedef struct bdc_matrix bdc_matrix;

typedef struct bdc_verify_report {
  int shape_ok;
  int restriction_ok;
  int structure_ok;
  int within_bounds;
  size_t rank;
} bdc_verify_report;

BDC_API const char* bdc_status_name(bdc_status status);
/* Message of the most recent failure on this thread; "" if none. */
BDC_API const char* bdc_last_error_message(void);
/* 1-based line or block index of the most recent failure, 0 if not applicable. */
BDC_API size_t bdc_last_error_line(void);
BDC_API size_t bdc_last_error_block(void);

/* Partial matrices (text format: field / structure / block sections). */
BDC_API bdc_status bdc_partial_parse(const char* text, bdc_partial** out);
BDC_API void bdc_partial_destroy(bdc_partial* partial);
BDC_API bdc_status bdc_partial_shape(const bdc_partial* partial, size_t* block_count, size_t* total_size);
BDC_API bdc_status bdc_partial_bounds(const bdc_partial* partial, int* min_known, size_t* min_rank,
                                      size_t* max_rank);
/* Constructs and re-verifies an extremal completion. */
BDC_API bdc_status bdc_partial_complete(const bdc_partial* partial, bdc_target target, bdc_matrix** out,
                                        size_t* rank);
/* Fills `report`; returns BDC_OK even when checks fail. */
BDC_API bdc_status bdc_partial_verify(const bdc_partial* partial, const bdc_matrix* completion,
                                      bdc_verify_report* report);
/* budget == 0 selects the default budget. */
BDC_API bdc_status bdc_partial_oracle(const bdc_partial* partial, uint64_t budget, size_t* min_rank,
                                      size_t* max_rank, uint64_t* enumerated);
/* Parses matrix rows over the partial's field. */
BDC_API bdc_status bdc_partial_parse_matrix(const bdc_partial* partial, const char* text, bdc_matrix** out);

/* Matrices. */
/* Rows with an optional leading "field ..." line; rational when absent. */
BDC_API bdc_status bdc_matrix_parse(const char* text, bdc_matrix** out);
BDC_API void bdc_matrix_destroy(bdc_matrix* matrix);
BDC_API size_t bdc_matrix_rows(const bdc_matrix* matrix);
BDC_API size_t bdc_matrix_cols(const bdc_matrix* matrix);
BDC_API bdc_status bdc_matrix_rank(const bdc_matrix* matrix, size_t* rank);
/* Newly allocated text, one row per line; release with bdc_string_free. */
BDC_API bdc_status bdc_matrix_render(const bdc_matrix* matrix, char** out);
BDC_API void bdc_string_free(char* text);
/* Congruence canonical form D = P A P^T; checks the identity before returning. */
BDC_API bdc_status bdc_matrix_canon(const bdc_matrix* matrix, bdc_canon_kind kind, bdc_matrix** canonical,
                                    bdc_matrix** transform, size_t* rank);
/* Generator T/E/R of rank r and size m x n; modulus 0 selects the rationals. */
BDC_API bdc_status bdc_generator_matrix(bdc_generator kind, size_t r, size_t m, size_t n, uint64_t modulus,
                                        bdc_matrix** out);

#ifdef __cplusplus
}
#endif

#endif /* BDCOMPLETE_H */
