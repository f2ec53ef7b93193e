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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdc/field.hpp"

namespace bdc {

/// Dense row-major matrix over an exact field. Indices are 0-based.
class Matrix {
 public:
  /// Zero matrix; rows and cols must be at least 1.
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  /// Bounds-checked access.
  const Scalar& at(std::size_t i, std::size_t j) const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix submatrix(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
  /// Overwrites the region starting at (row, col) with `block`.
  void set_block(std::size_t row, std::size_t col, const Matrix& block);

  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

enum class Axis { Rows, Columns };

/// One elementary operation. For Rows: Swap exchanges rows i and j, Scale
/// multiplies row i by c, AddMultiple adds c times row j to row i. Columns
/// read the same way with columns. The column form of an operation equals
/// right multiplication by the transpose of its row-form matrix.
struct ElementaryOp {
  enum class Kind { Swap, Scale, AddMultiple };

  Kind kind;
  Axis axis;
  std::size_t i;
  std::size_t j;
  std::optional<Scalar> coefficient;

  static ElementaryOp swap(Axis axis, std::size_t i, std::size_t j);
  static ElementaryOp scale(Axis axis, std::size_t i, const Scalar& c);
  static ElementaryOp add_multiple(Axis axis, std::size_t i, std::size_t j, const Scalar& c);

  ElementaryOp on(Axis other) const;
};

Matrix apply_elementary(const Matrix& m, const ElementaryOp& op);
void apply_elementary_in_place(Matrix& m, const ElementaryOp& op);

/// Exact rank by Gaussian elimination; pivots are the first nonzero entry of
/// each column scanning top to bottom.
std::size_t rank(const Matrix& m);

/// Throws SingularTransform when `m` is singular and NonSquare when it is not square.
Matrix inverse(const Matrix& m);

/// Ones at (m-1-q, n-1-q) for q < r.
Matrix gen_T(const Field& field, std::size_t r, std::size_t m, std::size_t n);
/// Ones at (q, q) for q < r.
Matrix gen_E(const Field& field, std::size_t r, std::size_t m, std::size_t n);
/// r/2 leading [[0, 1], [-1, 0]] blocks; r must be even.
Matrix gen_R(const Field& field, std::size_t r, std::size_t m, std::size_t n);

/// Diag(A_1, ..., A_k) of square blocks.
Matrix block_diag(std::span<const Matrix> blocks);

enum class MatrixStructure { General, Symmetric, Antisymmetric, Both };

bool is_symmetric(const Matrix& m);
/// M = -M^T with a zero diagonal.
bool is_antisymmetric(const Matrix& m);
MatrixStructure structure_check(const Matrix& m);

const char* to_string(MatrixStructure s) noexcept;

/// One row per line, scalars separated by single spaces, trailing newline.
std::string render(const Matrix& m);

}  // namespace bdc
