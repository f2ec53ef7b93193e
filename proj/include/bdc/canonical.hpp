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

#include <vector>

#include "bdc/matrix.hpp"

namespace bdc {

/// A row operation immediately followed by the same operation on columns.
struct SymmetricStep {
  ElementaryOp row;
  ElementaryOp column;
};

/// transform * input * transform^T == canonical, with transform built as the
/// product of the logged steps.
struct CongruenceReduction {
  Matrix input;
  Matrix canonical;
  Matrix transform;
  Matrix inverse_transform;
  std::vector<SymmetricStep> op_log;
};

/// Two-sided reduction left * input * right == E^r (any characteristic).
struct EquivalenceReduction {
  Matrix input;
  Matrix canonical;
  Matrix left;
  Matrix left_inverse;
  Matrix right;
  Matrix right_inverse;
};

/// Congruence to a diagonal matrix whose nonzero entries form a prefix.
/// Requires a symmetric input over a field of characteristic other than 2.
CongruenceReduction symmetric_b_diagonalize(const Matrix& a);

/// Congruence to R^r_{n,n}, r = rank(a). Requires an antisymmetric input
/// over a field of characteristic other than 2.
CongruenceReduction skew_canonicalize(const Matrix& a);

/// Row and column reduction to E^r_{m,n}.
EquivalenceReduction rank_normal_form(const Matrix& a);

/// P * M * P^T.
Matrix conjugate(const Matrix& m, const Matrix& p);

/// Diagonal, and nonzero exactly on the first rank(d) diagonal positions.
bool is_b_diagonal(const Matrix& d);

}  // namespace bdc
