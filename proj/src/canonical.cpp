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

#include "bdc/canonical.hpp"

#include "bdc/error.hpp"

namespace bdc {

namespace {

/// Column operation X -> X * E^{-1}, where E is the matrix of `row_op`.
ElementaryOp inverse_as_column_op(const ElementaryOp& row_op) {
  switch (row_op.kind) {
    case ElementaryOp::Kind::Swap:
      return ElementaryOp::swap(Axis::Columns, row_op.i, row_op.j);
    case ElementaryOp::Kind::Scale:
      return ElementaryOp::scale(Axis::Columns, row_op.i, row_op.coefficient->inverse());
    case ElementaryOp::Kind::AddMultiple:
      return ElementaryOp::add_multiple(Axis::Columns, row_op.j, row_op.i, -*row_op.coefficient);
  }
  throw Error(ErrorCode::InternalError, "unknown elementary op");
}

/// Row operation X -> F^{-1} * X, where F is the matrix of `column_op`.
ElementaryOp inverse_as_row_op(const ElementaryOp& column_op) {
  switch (column_op.kind) {
    case ElementaryOp::Kind::Swap:
      return ElementaryOp::swap(Axis::Rows, column_op.i, column_op.j);
    case ElementaryOp::Kind::Scale:
      return ElementaryOp::scale(Axis::Rows, column_op.i, column_op.coefficient->inverse());
    case ElementaryOp::Kind::AddMultiple:
      return ElementaryOp::add_multiple(Axis::Rows, column_op.j, column_op.i, -*column_op.coefficient);
  }
  throw Error(ErrorCode::InternalError, "unknown elementary op");
}

class CongruenceRecorder {
 public:
  explicit CongruenceRecorder(const Matrix& a)
      : input_(a),
        work_(a),
        transform_(Matrix::identity(a.field(), a.rows())),
        inverse_(Matrix::identity(a.field(), a.rows())) {}

  const Matrix& work() const { return work_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return work_(i, j); }

  void step(const ElementaryOp& row_op) {
    const ElementaryOp column_op = row_op.on(Axis::Columns);
    apply_elementary_in_place(work_, row_op);
    apply_elementary_in_place(work_, column_op);
    apply_elementary_in_place(transform_, row_op);
    apply_elementary_in_place(inverse_, inverse_as_column_op(row_op));
    log_.push_back(SymmetricStep{row_op, column_op});
  }

  void swap(std::size_t i, std::size_t j) {
    if (i != j) step(ElementaryOp::swap(Axis::Rows, i, j));
  }

  CongruenceReduction finish() && {
    return CongruenceReduction{std::move(input_), std::move(work_), std::move(transform_),
                               std::move(inverse_), std::move(log_)};
  }

 private:
  Matrix input_;
  Matrix work_;
  Matrix transform_;
  Matrix inverse_;
  std::vector<SymmetricStep> log_;
};

void require_odd_characteristic(const Matrix& a) {
  if (a.field().characteristic() == 2) {
    throw Error(ErrorCode::CharacteristicTwo, "congruence canonical forms need characteristic != 2");
  }
}

}  // namespace

CongruenceReduction symmetric_b_diagonalize(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "symmetric reduction of a non-square matrix");
  if (!is_symmetric(a)) throw Error(ErrorCode::NotSymmetric, "input is not symmetric");
  require_odd_characteristic(a);

  const std::size_t n = a.rows();
  const Field& field = a.field();
  CongruenceRecorder rec(a);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t diag = n;
    for (std::size_t j = i; j < n; ++j) {
      if (!rec.at(j, j).is_zero()) {
        diag = j;
        break;
      }
    }
    if (diag == n) {
      // Trailing diagonal is zero; pair a nonzero off-diagonal (j, l) into (j, j).
      std::size_t pj = n;
      std::size_t pl = n;
      for (std::size_t j = i; j < n && pj == n; ++j) {
        for (std::size_t l = i; l < n; ++l) {
          if (l != j && !rec.at(j, l).is_zero()) {
            pj = j;
            pl = l;
            break;
          }
        }
      }
      if (pj == n) break;  // trailing block is zero
      rec.step(ElementaryOp::add_multiple(Axis::Rows, pj, pl, Scalar::one(field)));
      diag = pj;
    }
    rec.swap(i, diag);
    const Scalar pivot_inv = rec.at(i, i).inverse();
    for (std::size_t m = i + 1; m < n; ++m) {
      if (rec.at(m, i).is_zero()) continue;
      rec.step(ElementaryOp::add_multiple(Axis::Rows, m, i, -(rec.at(m, i) * pivot_inv)));
    }
  }
  return std::move(rec).finish();
}

CongruenceReduction skew_canonicalize(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "skew reduction of a non-square matrix");
  if (!is_antisymmetric(a)) throw Error(ErrorCode::NotAntisymmetric, "input is not antisymmetric");
  require_odd_characteristic(a);

  const std::size_t n = a.rows();
  CongruenceRecorder rec(a);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    std::size_t pj = n;
    std::size_t pl = n;
    for (std::size_t j = i; j < n && pj == n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (!rec.at(j, l).is_zero()) {
          pj = j;
          pl = l;
          break;
        }
      }
    }
    if (pj == n) break;
    rec.swap(i, pj);
    // pl > pj >= i, so the first swap leaves pl in place.
    rec.swap(i + 1, pl);
    const Scalar c = rec.at(i, i + 1);
    if (!c.is_one()) rec.step(ElementaryOp::scale(Axis::Rows, i, c.inverse()));
    for (std::size_t m = i + 2; m < n; ++m) {
      if (!rec.at(m, i).is_zero()) {
        rec.step(ElementaryOp::add_multiple(Axis::Rows, m, i + 1, rec.at(m, i)));
      }
      if (!rec.at(m, i + 1).is_zero()) {
        rec.step(ElementaryOp::add_multiple(Axis::Rows, m, i, -rec.at(m, i + 1)));
      }
    }
  }
  return std::move(rec).finish();
}

EquivalenceReduction rank_normal_form(const Matrix& a) {
  const Field& field = a.field();
  Matrix work(a);
  Matrix left = Matrix::identity(field, a.rows());
  Matrix left_inv = Matrix::identity(field, a.rows());
  Matrix right = Matrix::identity(field, a.cols());
  Matrix right_inv = Matrix::identity(field, a.cols());

  auto row_step = [&](const ElementaryOp& op) {
    apply_elementary_in_place(work, op);
    apply_elementary_in_place(left, op);
    apply_elementary_in_place(left_inv, inverse_as_column_op(op));
  };
  auto column_step = [&](const ElementaryOp& op) {
    apply_elementary_in_place(work, op);
    apply_elementary_in_place(right, op);
    apply_elementary_in_place(right_inv, inverse_as_row_op(op));
  };

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
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
    if (pivot != r) row_step(ElementaryOp::swap(Axis::Rows, pivot, r));
    if (!work(r, col).is_one()) row_step(ElementaryOp::scale(Axis::Rows, r, work(r, col).inverse()));
    for (std::size_t i = 0; i < work.rows(); ++i) {
      if (i != r && !work(i, col).is_zero()) {
        row_step(ElementaryOp::add_multiple(Axis::Rows, i, r, -work(i, col)));
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }

  // Move pivots onto the diagonal and clear the rest of each pivot row.
  for (std::size_t q = 0; q < pivot_cols.size(); ++q) {
    if (pivot_cols[q] != q) column_step(ElementaryOp::swap(Axis::Columns, q, pivot_cols[q]));
    for (std::size_t j = q + 1; j < work.cols(); ++j) {
      if (!work(q, j).is_zero()) column_step(ElementaryOp::add_multiple(Axis::Columns, j, q, -work(q, j)));
    }
  }
  return EquivalenceReduction{a, std::move(work), std::move(left), std::move(left_inv),
                              std::move(right), std::move(right_inv)};
}

Matrix conjugate(const Matrix& m, const Matrix& p) {
  if (!p.is_square()) throw Error(ErrorCode::SizeMismatch, "transform must be square");
  if (p.cols() != m.rows() || m.rows() != m.cols()) {
    throw Error(ErrorCode::SizeMismatch, "transform and matrix sizes do not match");
  }
  if (rank(p) != p.rows()) throw Error(ErrorCode::SingularTransform, "transform is singular");
  return p * m * p.transpose();
}

bool is_b_diagonal(const Matrix& d) {
  if (!d.is_square()) return false;
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && !d(i, j).is_zero()) return false;
    }
    if (d(i, i).is_zero()) {
      seen_zero = true;
    } else if (seen_zero) {
      return false;
    }
  }
  return true;
}

}  // namespace bdc
