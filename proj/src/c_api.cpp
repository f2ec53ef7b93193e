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

#include "bdcomplete.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "bdc/canonical.hpp"
#include "bdc/completion.hpp"
#include "bdc/error.hpp"
#include "bdc/oracle.hpp"
#include "bdc/text.hpp"

struct bdc_partial {
  bdc::BlockDiagonalPartial value;
};

struct bdc_matrix {
  bdc::Matrix value;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t block = 0;
};

thread_local LastError last_error;

bdc_status to_status(bdc::ErrorCode code) {
  using bdc::ErrorCode;
  switch (code) {
    case ErrorCode::SyntaxError: return BDC_ERR_SYNTAX;
    case ErrorCode::NonPrimeModulus: return BDC_ERR_NON_PRIME_MODULUS;
    case ErrorCode::UnsupportedModulus: return BDC_ERR_UNSUPPORTED_MODULUS;
    case ErrorCode::DivisionByZero: return BDC_ERR_DIVISION_BY_ZERO;
    case ErrorCode::FieldMismatch: return BDC_ERR_FIELD_MISMATCH;
    case ErrorCode::RankTooLarge: return BDC_ERR_RANK_TOO_LARGE;
    case ErrorCode::OddRank: return BDC_ERR_ODD_RANK;
    case ErrorCode::NonSquareBlock:
    case ErrorCode::NonSquare: return BDC_ERR_NON_SQUARE;
    case ErrorCode::IndexOutOfRange: return BDC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::ZeroScale: return BDC_ERR_INVALID_ARGUMENT;
    case ErrorCode::SizeMismatch: return BDC_ERR_SIZE_MISMATCH;
    case ErrorCode::NotSymmetric: return BDC_ERR_NOT_SYMMETRIC;
    case ErrorCode::NotAntisymmetric: return BDC_ERR_NOT_ANTISYMMETRIC;
    case ErrorCode::CharacteristicTwo: return BDC_ERR_CHARACTERISTIC_TWO;
    case ErrorCode::SingularTransform: return BDC_ERR_SINGULAR_TRANSFORM;
    case ErrorCode::EmptyBlockList: return BDC_ERR_EMPTY_BLOCK_LIST;
    case ErrorCode::StructureViolation: return BDC_ERR_STRUCTURE_VIOLATION;
    case ErrorCode::BudgetExceeded: return BDC_ERR_BUDGET_EXCEEDED;
    case ErrorCode::NonFiniteField: return BDC_ERR_NON_FINITE_FIELD;
    case ErrorCode::UnsupportedTarget: return BDC_ERR_UNSUPPORTED_TARGET;
    case ErrorCode::InvalidArgument: return BDC_ERR_INVALID_ARGUMENT;
    case ErrorCode::InternalError: return BDC_ERR_INTERNAL;
  }
  return BDC_ERR_INTERNAL;
}

bdc_status fail(bdc_status status, std::string message) {
  last_error = LastError{std::move(message), 0, 0};
  return status;
}

template <class Fn>
bdc_status guarded(Fn&& fn) noexcept {
  try {
    last_error = LastError{};
    fn();
    return BDC_OK;
  } catch (const bdc::Error& e) {
    last_error = LastError{e.what(), e.line().value_or(0), e.block().value_or(0)};
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    return fail(BDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BDC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BDC_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define BDC_REQUIRE(cond)                                                       \
  do {                                                                          \
    if (!(cond)) return fail(BDC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

BDC_API const char* bdc_status_name(bdc_status status) {
  switch (status) {
    case BDC_OK: return "ok";
    case BDC_ERR_SYNTAX: return "SyntaxError";
    case BDC_ERR_NON_PRIME_MODULUS: return "NonPrimeModulus";
    case BDC_ERR_UNSUPPORTED_MODULUS: return "UnsupportedModulus";
    case BDC_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case BDC_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case BDC_ERR_RANK_TOO_LARGE: return "RankTooLarge";
    case BDC_ERR_ODD_RANK: return "OddRank";
    case BDC_ERR_NON_SQUARE: return "NonSquare";
    case BDC_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case BDC_ERR_SIZE_MISMATCH: return "SizeMismatch";
    case BDC_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case BDC_ERR_NOT_ANTISYMMETRIC: return "NotAntisymmetric";
    case BDC_ERR_CHARACTERISTIC_TWO: return "CharacteristicTwo";
    case BDC_ERR_SINGULAR_TRANSFORM: return "SingularTransform";
    case BDC_ERR_EMPTY_BLOCK_LIST: return "EmptyBlockList";
    case BDC_ERR_STRUCTURE_VIOLATION: return "StructureViolation";
    case BDC_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case BDC_ERR_NON_FINITE_FIELD: return "NonFiniteField";
    case BDC_ERR_UNSUPPORTED_TARGET: return "UnsupportedTarget";
    case BDC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case BDC_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

BDC_API const char* bdc_last_error_message(void) { return last_error.message.c_str(); }
BDC_API size_t bdc_last_error_line(void) { return last_error.line; }
BDC_API size_t bdc_last_error_block(void) { return last_error.block; }

BDC_API bdc_status bdc_partial_parse(const char* text, bdc_partial** out) {
  BDC_REQUIRE(text && out);
  return guarded([&] { *out = new bdc_partial{bdc::parse_partial(text)}; });
}

BDC_API void bdc_partial_destroy(bdc_partial* partial) { delete partial; }

BDC_API bdc_status bdc_partial_shape(const bdc_partial* partial, size_t* block_count, size_t* total_size) {
  BDC_REQUIRE(partial && block_count && total_size);
  *block_count = partial->value.block_count();
  *total_size = partial->value.total_size();
  return BDC_OK;
}

BDC_API bdc_status bdc_partial_bounds(const bdc_partial* partial, int* min_known, size_t* min_rank,
                                      size_t* max_rank) {
  BDC_REQUIRE(partial && min_known && min_rank && max_rank);
  return guarded([&] {
    const auto bounds = bdc::rank_bounds(partial->value);
    *min_known = bounds.min_rank.has_value() ? 1 : 0;
    *min_rank = bounds.min_rank.value_or(0);
    *max_rank = bounds.max_rank;
  });
}

BDC_API bdc_status bdc_partial_complete(const bdc_partial* partial, bdc_target target, bdc_matrix** out,
                                        size_t* rank) {
  BDC_REQUIRE(partial && out && rank);
  return guarded([&] {
    auto cert = bdc::complete(partial->value, target == BDC_TARGET_MIN ? bdc::Target::Min : bdc::Target::Max);
    if (!bdc::check_certificate(cert).passed()) {
      throw bdc::Error(bdc::ErrorCode::InternalError, "certificate failed re-verification");
    }
    *rank = cert.claimed_rank;
    *out = new bdc_matrix{std::move(cert.completed)};
  });
}

BDC_API bdc_status bdc_partial_verify(const bdc_partial* partial, const bdc_matrix* completion,
                                      bdc_verify_report* report) {
  BDC_REQUIRE(partial && completion && report);
  return guarded([&] {
    const auto check = bdc::check_completion(partial->value, completion->value);
    *report = bdc_verify_report{check.shape_ok ? 1 : 0, check.restriction_ok ? 1 : 0, check.structure_ok ? 1 : 0,
                                check.within_bounds ? 1 : 0, check.rank};
  });
}

BDC_API bdc_status bdc_partial_oracle(const bdc_partial* partial, uint64_t budget, size_t* min_rank,
                                      size_t* max_rank, uint64_t* enumerated) {
  BDC_REQUIRE(partial && min_rank && max_rank && enumerated);
  return guarded([&] {
    const auto result = bdc::exhaustive_extremes(partial->value, budget == 0 ? bdc::kDefaultOracleBudget : budget);
    *min_rank = result.min_rank;
    *max_rank = result.max_rank;
    *enumerated = result.enumerated;
  });
}

BDC_API bdc_status bdc_partial_parse_matrix(const bdc_partial* partial, const char* text, bdc_matrix** out) {
  BDC_REQUIRE(partial && text && out);
  return guarded([&] { *out = new bdc_matrix{bdc::parse_matrix(text, partial->value.field())}; });
}

BDC_API bdc_status bdc_matrix_parse(const char* text, bdc_matrix** out) {
  BDC_REQUIRE(text && out);
  return guarded([&] { *out = new bdc_matrix{bdc::parse_matrix_file(text).matrix}; });
}

BDC_API void bdc_matrix_destroy(bdc_matrix* matrix) { delete matrix; }

BDC_API size_t bdc_matrix_rows(const bdc_matrix* matrix) { return matrix ? matrix->value.rows() : 0; }
BDC_API size_t bdc_matrix_cols(const bdc_matrix* matrix) { return matrix ? matrix->value.cols() : 0; }

BDC_API bdc_status bdc_matrix_rank(const bdc_matrix* matrix, size_t* rank) {
  BDC_REQUIRE(matrix && rank);
  return guarded([&] { *rank = bdc::rank(matrix->value); });
}

BDC_API bdc_status bdc_matrix_render(const bdc_matrix* matrix, char** out) {
  BDC_REQUIRE(matrix && out);
  return guarded([&] { *out = duplicate(bdc::render(matrix->value)); });
}

BDC_API void bdc_string_free(char* text) { std::free(text); }

BDC_API bdc_status bdc_matrix_canon(const bdc_matrix* matrix, bdc_canon_kind kind, bdc_matrix** canonical,
                                    bdc_matrix** transform, size_t* rank) {
  BDC_REQUIRE(matrix && canonical && transform && rank);
  return guarded([&] {
    auto red = kind == BDC_CANON_SYMMETRIC ? bdc::symmetric_b_diagonalize(matrix->value)
                                           : bdc::skew_canonicalize(matrix->value);
    if (!(bdc::conjugate(red.input, red.transform) == red.canonical)) {
      throw bdc::Error(bdc::ErrorCode::InternalError, "P A P^T differs from the canonical form");
    }
    const std::size_t r = bdc::rank(red.canonical);
    auto c = std::make_unique<bdc_matrix>(bdc_matrix{std::move(red.canonical)});
    auto t = std::make_unique<bdc_matrix>(bdc_matrix{std::move(red.transform)});
    *canonical = c.release();
    *transform = t.release();
    *rank = r;
  });
}

BDC_API bdc_status bdc_generator_matrix(bdc_generator kind, size_t r, size_t m, size_t n, uint64_t modulus,
                                        bdc_matrix** out) {
  BDC_REQUIRE(out);
  return guarded([&] {
    const bdc::Field field = modulus == 0 ? bdc::Field::rationals() : bdc::Field::prime(modulus);
    switch (kind) {
      case BDC_GEN_T: *out = new bdc_matrix{bdc::gen_T(field, r, m, n)}; return;
      case BDC_GEN_E: *out = new bdc_matrix{bdc::gen_E(field, r, m, n)}; return;
      case BDC_GEN_R: *out = new bdc_matrix{bdc::gen_R(field, r, m, n)}; return;
    }
    throw bdc::Error(bdc::ErrorCode::InvalidArgument, "unknown generator");
  });
}

}  // extern "C"
