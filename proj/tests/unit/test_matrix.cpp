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

#include "doctest.h"

#include <vector>

#include "bdc/error.hpp"
#include "bdc/matrix.hpp"
#include "support/generators.hpp"

using namespace bdc;

namespace {

const Field Q = Field::rationals();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("generators match the printed examples") {
  CHECK(gen_T(Q, 3, 4, 5) == Matrix::from_ints(Q, {{0, 0, 0, 0, 0},
                                                  {0, 0, 1, 0, 0},
                                                  {0, 0, 0, 1, 0},
                                                  {0, 0, 0, 0, 1}}));
  CHECK(gen_E(Q, 2, 4, 4) == Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  CHECK(gen_R(Q, 4, 5, 6) == Matrix::from_ints(Q, {{0, 1, 0, 0, 0, 0},
                                                  {-1, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 1, 0, 0},
                                                  {0, 0, -1, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0}}));
}

TEST_CASE("generator edge cases") {
  CHECK(gen_T(Q, 0, 2, 3) == Matrix(Q, 2, 3));
  CHECK(gen_T(Q, 2, 2, 2) == Matrix::identity(Q, 2));
  CHECK(gen_E(Q, 0, 3, 3) == Matrix(Q, 3, 3));
  CHECK(gen_E(Q, 3, 3, 3) == Matrix::identity(Q, 3));
  CHECK(gen_R(Q, 0, 4, 4) == Matrix(Q, 4, 4));
  CHECK(gen_R(Q, 2, 2, 2) == Matrix::from_ints(Q, {{0, 1}, {-1, 0}}));
  CHECK(code_of([] { gen_T(Q, 3, 2, 5); }) == ErrorCode::RankTooLarge);
  CHECK(code_of([] { gen_E(Q, 4, 5, 3); }) == ErrorCode::RankTooLarge);
  CHECK(code_of([] { gen_R(Q, 3, 4, 4); }) == ErrorCode::OddRank);
  CHECK(code_of([] { gen_R(Q, 6, 4, 4); }) == ErrorCode::RankTooLarge);
}

TEST_CASE("generators have rank exactly r") {
  const Field f3 = Field::prime(3);
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t r = 0; r <= std::min(m, n); ++r) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(rank(gen_T(Q, r, m, n)) == r);
        CHECK(rank(gen_E(f3, r, m, n)) == r);
        if (r % 2 == 0) {
          CHECK(rank(gen_R(Q, r, m, n)) == r);
          if (m == n) {
            CHECK(structure_check(gen_R(f3, r, n, n)) ==
                  (r == 0 ? MatrixStructure::Both : MatrixStructure::Antisymmetric));
          }
        }
      }
}

TEST_CASE("rank examples") {
  CHECK(rank(gen_E(Q, 2, 4, 4)) == 2);
  CHECK(rank(gen_R(Q, 4, 5, 6)) == 4);
  CHECK(rank(Matrix::from_ints(Q, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::from_ints(Field::prime(3), {{1, 2}, {2, 1}})) == 1);
  CHECK(rank(Matrix::from_ints(Field::prime(5), {{1, 2}, {2, 1}})) == 2);
}

TEST_CASE("elementary operation examples") {
  const Matrix i2 = Matrix::identity(Q, 2);
  const Matrix swapped = apply_elementary(i2, ElementaryOp::swap(Axis::Rows, 0, 1));
  CHECK(swapped == Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
  CHECK(apply_elementary(swapped, ElementaryOp::add_multiple(Axis::Rows, 0, 1, Scalar::one(Q))) ==
        Matrix::from_ints(Q, {{1, 1}, {1, 0}}));
  CHECK(apply_elementary(Matrix::from_ints(Q, {{2, 0}, {0, 1}}),
                         ElementaryOp::scale(Axis::Columns, 0, Scalar(Q, 1, 2))) == i2);
  CHECK(apply_elementary(Matrix::from_ints(Q, {{1, 2}, {3, 4}}),
                         ElementaryOp::add_multiple(Axis::Columns, 1, 0, Scalar(Q, -2))) ==
        Matrix::from_ints(Q, {{1, 0}, {3, -2}}));

  CHECK(code_of([&] { apply_elementary(i2, ElementaryOp::swap(Axis::Rows, 0, 2)); }) ==
        ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { ElementaryOp::scale(Axis::Rows, 0, Scalar::zero(Q)); }) == ErrorCode::ZeroScale);
}

TEST_CASE("elementary operations preserve rank") {
  testing::Rng rng(7);
  for (const Field& f : {Q, Field::prime(3), Field::prime(7)}) {
    for (int trial = 0; trial < 150; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 5);
      const std::size_t rows = dim(rng);
      const std::size_t cols = dim(rng);
      Matrix m = testing::random_matrix(f, rows, cols, rng);
      if (trial % 3 == 0) m = m * gen_E(f, std::min(rows, cols) / 2, cols, cols);  // rank-deficient
      const std::size_t r = rank(m);
      CHECK(rank(m.transpose()) == r);
      const Axis axis = trial % 2 == 0 ? Axis::Rows : Axis::Columns;
      const std::size_t extent = axis == Axis::Rows ? rows : cols;
      std::uniform_int_distribution<std::size_t> idx(0, extent - 1);
      const std::size_t i = idx(rng);
      const std::size_t j = idx(rng);
      CHECK(rank(apply_elementary(m, ElementaryOp::swap(axis, i, j))) == r);
      CHECK(rank(apply_elementary(m, ElementaryOp::scale(axis, i, testing::random_nonzero(f, rng)))) == r);
      if (i != j) {
        CHECK(rank(apply_elementary(m, ElementaryOp::add_multiple(axis, i, j, testing::random_scalar(f, rng)))) == r);
      }
    }
  }
}

TEST_CASE("block_diag") {
  const Matrix one = Matrix::from_ints(Q, {{1}});
  const Matrix skew = gen_R(Q, 2, 2, 2);
  const std::vector<Matrix> blocks{one, skew};
  CHECK(block_diag(blocks) == Matrix::from_ints(Q, {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
  CHECK(block_diag(std::vector<Matrix>{skew}) == skew);
  CHECK(block_diag(std::vector<Matrix>{skew, skew}) == gen_R(Q, 4, 4, 4));
  CHECK(code_of([] { block_diag(std::vector<Matrix>{Matrix(Q, 1, 2)}); }) == ErrorCode::NonSquareBlock);
  CHECK(code_of([] { block_diag(std::vector<Matrix>{Matrix(Q, 1, 1), Matrix(Field::prime(3), 1, 1)}); }) ==
        ErrorCode::FieldMismatch);

  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Matrix> bs;
    std::size_t total = 0;
    for (std::size_t n : testing::random_sizes(4, 4, rng)) {
      bs.push_back(testing::random_block(Q, StructureClass::General, n, rng));
      total += rank(bs.back());
    }
    CHECK(rank(block_diag(bs)) == total);
  }
}

TEST_CASE("structure_check") {
  CHECK(structure_check(Matrix::from_ints(Q, {{0, 1}, {1, 0}})) == MatrixStructure::Symmetric);
  CHECK(structure_check(Matrix::from_ints(Q, {{0, 1}, {-1, 0}})) == MatrixStructure::Antisymmetric);
  CHECK(structure_check(Matrix::from_ints(Field::prime(2), {{0, 1}, {1, 0}})) == MatrixStructure::Both);
  // In characteristic 2 a nonzero diagonal rules out antisymmetry.
  CHECK(structure_check(Matrix::from_ints(Field::prime(2), {{1, 1}, {1, 0}})) == MatrixStructure::Symmetric);
  CHECK(structure_check(Matrix::from_ints(Q, {{1, 2}, {3, 4}})) == MatrixStructure::General);
  CHECK(code_of([] { structure_check(Matrix(Q, 2, 3)); }) == ErrorCode::NonSquare);
}

TEST_CASE("inverse and products") {
  testing::Rng rng(3);
  for (const Field& f : {Q, Field::prime(5)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix p = testing::random_invertible(f, 4, rng);
      CHECK(p * inverse(p) == Matrix::identity(f, 4));
      CHECK(inverse(p) * p == Matrix::identity(f, 4));
    }
  }
  CHECK(code_of([] { inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})); }) == ErrorCode::SingularTransform);
  CHECK(code_of([] { Matrix(Q, 2, 3) * Matrix(Q, 2, 3); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([] { Matrix(Q, 0, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("render") {
  CHECK(render(Matrix::from_ints(Q, {{0, 1}, {-1, 0}})) == "0 1\n-1 0\n");
  Matrix half(Q, 1, 1);
  half(0, 0) = Scalar(Q, 1, 2);
  CHECK(render(half) == "1/2\n");
  CHECK(render(gen_R(Field::prime(5), 2, 2, 2)) == "0 1\n4 0\n");
}
