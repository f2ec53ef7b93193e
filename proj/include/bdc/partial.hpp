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
#include <span>
#include <vector>

#include "bdc/matrix.hpp"

namespace bdc {

enum class StructureClass { General, Symmetric, Antisymmetric };

const char* to_string(StructureClass s) noexcept;

/// Throws EmptyBlockList, NonSquareBlock, FieldMismatch, StructureViolation (with
/// the 1-based block index) or CharacteristicTwo.
void validate(const Field& field, StructureClass structure, std::span<const Matrix> blocks);

/// Partial matrix whose specified entries are exactly the square diagonal
/// blocks A_1, ..., A_k. Always valid once constructed.
class BlockDiagonalPartial {
 public:
  BlockDiagonalPartial(const Field& field, StructureClass structure, std::vector<Matrix> blocks);

  const Field& field() const noexcept { return field_; }
  StructureClass structure() const noexcept { return structure_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  /// Row offset of block i inside a completion.
  const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }
  std::size_t total_size() const noexcept { return total_; }

  /// Diag(A_1, ..., A_k).
  Matrix zero_fill() const;

 private:
  Field field_;
  StructureClass structure_;
  std::vector<Matrix> blocks_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> ranks_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// n for even n, n - 1 for odd n.
constexpr std::size_t even_part(std::size_t n) noexcept { return n - (n % 2); }

struct SortedPartial {
  BlockDiagonalPartial partial;
  /// permutation[new_index] == old_index.
  std::vector<std::size_t> permutation;
};

/// Stable sort by block size.
SortedPartial sort_blocks_by_size(const BlockDiagonalPartial& p);

struct RankBounds {
  std::optional<std::size_t> min_rank;  // nullopt: not determined (symmetric)
  std::size_t max_rank = 0;

  friend bool operator==(const RankBounds&, const RankBounds&) = default;
};

/// Closed-form extremes from block sizes and ranks alone (any block order).
/// The second term of the maximum is minimised over every block of maximal size.
RankBounds rank_bounds(StructureClass structure, std::span<const std::size_t> sizes,
                       std::span<const std::size_t> ranks);

RankBounds rank_bounds(const BlockDiagonalPartial& p);

}  // namespace bdc
