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

#include "bdc/matrix.hpp"

#include <sstream>
#include <utility>

#include "bdc/error.hpp"

namespace bdc {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::InvalidArgument, "matrices need at least one row and one column");
  }
  entries_.assign(rows * cols, Scalar::zero(field));
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::SizeMismatch, "ragged initializer");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = Scalar(field, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::SizeMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].field() == field)) throw Error(ErrorCode::FieldMismatch, "entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix Matrix::submatrix(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "submatrix exceeds matrix bounds");
  }
  Matrix out(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row + i, col + j);
  return out;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& block) {
  if (!(block.field_ == field_)) throw Error(ErrorCode::FieldMismatch, "block from another field");
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "block exceeds matrix bounds");
  }
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(row + i, col + j) = block(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::SizeMismatch, "shape mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out(a);
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out(a);
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "inner dimensions differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(l, j).is_zero()) out(i, j) += x * b(l, j);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------

ElementaryOp ElementaryOp::swap(Axis axis, std::size_t i, std::size_t j) {
  return ElementaryOp{Kind::Swap, axis, i, j, std::nullopt};
}

ElementaryOp ElementaryOp::scale(Axis axis, std::size_t i, const Scalar& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroScale, "scale coefficient must be nonzero");
  return ElementaryOp{Kind::Scale, axis, i, i, c};
}

ElementaryOp ElementaryOp::add_multiple(Axis axis, std::size_t i, std::size_t j, const Scalar& c) {
  if (i == j) throw Error(ErrorCode::InvalidArgument, "add_multiple needs two distinct indices");
  return ElementaryOp{Kind::AddMultiple, axis, i, j, c};
}

ElementaryOp ElementaryOp::on(Axis other) const {
  ElementaryOp copy(*this);
  copy.axis = other;
  return copy;
}

void apply_elementary_in_place(Matrix& m, const ElementaryOp& op) {
  const std::size_t extent = op.axis == Axis::Rows ? m.rows() : m.cols();
  if (op.i >= extent || op.j >= extent) throw Error(ErrorCode::IndexOutOfRange, "elementary op index out of range");
  const std::size_t other = op.axis == Axis::Rows ? m.cols() : m.rows();
  auto ref = [&](std::size_t line, std::size_t k) -> Scalar& {
    return op.axis == Axis::Rows ? m(line, k) : m(k, line);
  };
  switch (op.kind) {
    case ElementaryOp::Kind::Swap:
      if (op.i == op.j) return;
      for (std::size_t k = 0; k < other; ++k) std::swap(ref(op.i, k), ref(op.j, k));
      return;
    case ElementaryOp::Kind::Scale: {
      if (!op.coefficient || op.coefficient->is_zero()) throw Error(ErrorCode::ZeroScale, "zero scale");
      for (std::size_t k = 0; k < other; ++k) ref(op.i, k) *= *op.coefficient;
      return;
    }
    case ElementaryOp::Kind::AddMultiple: {
      if (!op.coefficient) throw Error(ErrorCode::InvalidArgument, "add_multiple without coefficient");
      if (op.i == op.j) throw Error(ErrorCode::InvalidArgument, "add_multiple needs two distinct indices");
      if (op.coefficient->is_zero()) return;
      for (std::size_t k = 0; k < other; ++k) {
        const Scalar& src = ref(op.j, k);
        if (!src.is_zero()) ref(op.i, k) += *op.coefficient * src;
      }
      return;
    }
  }
}

Matrix apply_elementary(const Matrix& m, const ElementaryOp& op) {
  Matrix out(m);
  apply_elementary_in_place(out, op);
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix work(m);
  std::size_t r = 0;
  for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
    std::size_t pivot = work.rows();
    for (std::size_t i = r; i < work.rows(); ++i) {
      if (!work(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == work.rows()) continue;
    if (pivot != r) apply_elementary_in_place(work, ElementaryOp::swap(Axis::Rows, pivot, r));
    const Scalar inv = work(r, col).inverse();
    for (std::size_t i = r + 1; i < work.rows(); ++i) {
      if (work(i, col).is_zero()) continue;
      const Scalar factor = -(work(i, col) * inv);
      for (std::size_t j = col; j < work.cols(); ++j) {
        if (!work(r, j).is_zero()) work(i, j) += factor * work(r, j);
      }
    }
    ++r;
  }
  return r;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix work(m);
  Matrix inv = Matrix::identity(m.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!work(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) throw Error(ErrorCode::SingularTransform, "matrix is singular");
    if (pivot != col) {
      const auto op = ElementaryOp::swap(Axis::Rows, pivot, col);
      apply_elementary_in_place(work, op);
      apply_elementary_in_place(inv, op);
    }
    const auto normalize = ElementaryOp::scale(Axis::Rows, col, work(col, col).inverse());
    apply_elementary_in_place(work, normalize);
    apply_elementary_in_place(inv, normalize);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      const auto clear = ElementaryOp::add_multiple(Axis::Rows, i, col, -work(i, col));
      apply_elementary_in_place(work, clear);
      apply_elementary_in_place(inv, clear);
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------

Matrix gen_T(const Field& field, std::size_t r, std::size_t m, std::size_t n) {
  if (r > std::min(m, n)) throw Error(ErrorCode::RankTooLarge, "T: r exceeds min(m, n)");
  Matrix out(field, m, n);
  for (std::size_t q = 0; q < r; ++q) out(m - 1 - q, n - 1 - q) = Scalar::one(field);
  return out;
}

Matrix gen_E(const Field& field, std::size_t r, std::size_t m, std::size_t n) {
  if (r > std::min(m, n)) throw Error(ErrorCode::RankTooLarge, "E: r exceeds min(m, n)");
  Matrix out(field, m, n);
  for (std::size_t q = 0; q < r; ++q) out(q, q) = Scalar::one(field);
  return out;
}

Matrix gen_R(const Field& field, std::size_t r, std::size_t m, std::size_t n) {
  if (r % 2 != 0) throw Error(ErrorCode::OddRank, "R: r must be even");
  if (r > std::min(m, n)) throw Error(ErrorCode::RankTooLarge, "R: r exceeds min(m, n)");
  Matrix out(field, m, n);
  for (std::size_t q = 0; q < r; q += 2) {
    out(q, q + 1) = Scalar::one(field);
    out(q + 1, q) = -Scalar::one(field);
  }
  return out;
}

Matrix block_diag(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::EmptyBlockList, "block_diag of no blocks");
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!blocks[b].is_square()) throw Error::at_block(ErrorCode::NonSquareBlock, b + 1, "block is not square");
    if (!(blocks[b].field() == blocks.front().field())) {
      throw Error::at_block(ErrorCode::FieldMismatch, b + 1, "block over a different field");
    }
    total += blocks[b].rows();
  }
  Matrix out(blocks.front().field(), total, total);
  std::size_t offset = 0;
  for (const auto& block : blocks) {
    out.set_block(offset, offset, block);
    offset += block.rows();
  }
  return out;
}

bool is_symmetric(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "structure of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

bool is_antisymmetric(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "structure of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  }
  return true;
}

MatrixStructure structure_check(const Matrix& m) {
  const bool sym = is_symmetric(m);
  const bool anti = is_antisymmetric(m);
  if (sym && anti) return MatrixStructure::Both;
  if (sym) return MatrixStructure::Symmetric;
  if (anti) return MatrixStructure::Antisymmetric;
  return MatrixStructure::General;
}

const char* to_string(MatrixStructure s) noexcept {
  switch (s) {
    case MatrixStructure::General: return "general";
    case MatrixStructure::Symmetric: return "symmetric";
    case MatrixStructure::Antisymmetric: return "antisymmetric";
    case MatrixStructure::Both: return "both";
  }
  return "unknown";
}

std::string render(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out << ' ';
      out << m(i, j).to_string();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bdc
