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

#include "bdc/error.hpp"

namespace bdc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::OddRank: return "OddRank";
    case ErrorCode::NonSquareBlock: return "NonSquareBlock";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::EmptyBlockList: return "EmptyBlockList";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonFiniteField: return "NonFiniteField";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error Error::at_line(ErrorCode code, std::size_t line, const std::string& message) {
  Error e(code, "line " + std::to_string(line) + ": " + message);
  e.line_ = line;
  return e;
}

Error Error::at_block(ErrorCode code, std::size_t block, const std::string& message) {
  Error e(code, "block " + std::to_string(block) + ": " + message);
  e.block_ = block;
  return e;
}

}  // namespace bdc
