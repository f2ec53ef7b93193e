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

#include <string>
#include <string_view>

#include "bdc/partial.hpp"

namespace bdc {

// Partial matrix files:
//
//   # comment
//   field rational            | field prime <p>
//   structure general         | symmetric | antisymmetric
//   block <n>
//   <n lines of n scalars>
//   block <n>
//   ...
//
// Blank lines and lines starting with '#' are ignored. Syntax problems raise
// SyntaxError with a line number; invalid blocks raise the validation error
// with the block index.
BlockDiagonalPartial parse_partial(std::string_view text);

std::string render_partial(const BlockDiagonalPartial& p);

/// Rows of scalars over `field`. Blank lines, '#' comments and `rank=` lines
/// are skipped, so `complete` output parses back directly.
Matrix parse_matrix(std::string_view text, const Field& field);

struct MatrixFile {
  Field field;
  Matrix matrix;
};

/// A matrix with an optional leading `field ...` line (rational when absent).
MatrixFile parse_matrix_file(std::string_view text);

}  // namespace bdc
