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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bdc {

enum class ErrorCode {
  NonPrimeModulus,
  UnsupportedModulus,
  DivisionByZero,
  FieldMismatch,
  RankTooLarge,
  OddRank,
  NonSquareBlock,
  NonSquare,
  IndexOutOfRange,
  ZeroScale,
  SizeMismatch,
  NotSymmetric,
  NotAntisymmetric,
  CharacteristicTwo,
  SingularTransform,
  EmptyBlockList,
  StructureViolation,
  BudgetExceeded,
  NonFiniteField,
  SyntaxError,
  UnsupportedTarget,
  InvalidArgument,
  InternalError,
};

const char* to_string(ErrorCode code) noexcept;

/// All failures raised by the library carry a code; parse errors also carry a
/// 1-based line number and validation errors a 1-based block index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  static Error at_line(ErrorCode code, std::size_t line, const std::string& message);
  static Error at_block(ErrorCode code, std::size_t block, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> block() const noexcept { return block_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> block_;
};

}  // namespace bdc
