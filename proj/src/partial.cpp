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

#include "bdc/partial.hpp"

#include <algorithm>
#include <numeric>

#include "bdc/error.hpp"

namespace bdc {

const char* to_string(StructureClass s) noexcept {
  switch (s) {
    case StructureClass::General: return "general";
    case StructureClass::Symmetric: return "symmetric";
    case StructureClass::Antisymmetric: return "antisymmetric";
  }
  return "unknown";
}

void validate(const Field& field, StructureClass structure, std::span<const Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::EmptyBlockList, "a partial matrix needs at least one block");
  if (structure != StructureClass::General && field.characteristic() == 2) {
    throw Error(ErrorCode::CharacteristicTwo,
                std::string(to_string(structure)) + " completions need characteristic != 2");
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Matrix& block = blocks[b];
    if (!block.is_square()) throw Error::at_block(ErrorCode::NonSquareBlock, b + 1, "block is not square");
    if (!(block.field() == field)) {
      throw Error::at_block(ErrorCode::FieldMismatch, b + 1, "block is over " + block.field().describe());
    }
    if (structure == StructureClass::Symmetric && !is_symmetric(block)) {
      throw Error::at_block(ErrorCode::StructureViolation, b + 1, "block is not symmetric");
    }
    if (structure == StructureClass::Antisymmetric && !is_antisymmetric(block)) {
      throw Error::at_block(ErrorCode::StructureViolation, b + 1, "block is not antisymmetric");
    }
  }
}

BlockDiagonalPartial::BlockDiagonalPartial(const Field& field, StructureClass structure, std::vector<Matrix> blocks)
    : field_(field), structure_(structure), blocks_(std::move(blocks)) {
  validate(field_, structure_, blocks_);
  for (const auto& block : blocks_) {
    offsets_.push_back(total_);
    sizes_.push_back(block.rows());
    ranks_.push_back(rank(block));
    total_ += block.rows();
  }
}

Matrix BlockDiagonalPartial::zero_fill() const { return block_diag(blocks_); }

SortedPartial sort_blocks_by_size(const BlockDiagonalPartial& p) {
  std::vector<std::size_t> perm(p.block_count());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return p.sizes()[a] < p.sizes()[b]; });
  std::vector<Matrix> blocks;
  blocks.reserve(perm.size());
  for (std::size_t old : perm) blocks.push_back(p.block(old));
  return SortedPartial{BlockDiagonalPartial(p.field(), p.structure(), std::move(blocks)), std::move(perm)};
}

RankBounds rank_bounds(StructureClass structure, std::span<const std::size_t> sizes,
                       std::span<const std::size_t> ranks) {
  if (sizes.empty() || sizes.size() != ranks.size()) {
    throw Error(ErrorCode::InvalidArgument, "sizes and ranks must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (ranks[i] > sizes[i]) throw Error::at_block(ErrorCode::RankTooLarge, i + 1, "rank exceeds block size");
  }
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
  const std::size_t max_block_rank = *std::max_element(ranks.begin(), ranks.end());

  // 2 (S - n_k) + r_k, taking the smallest r_k among blocks of maximal size.
  std::size_t gap_term = 0;
  bool first = true;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] != largest) continue;
    const std::size_t term = 2 * (total - largest) + ranks[i];
    gap_term = first ? term : std::min(gap_term, term);
    first = false;
  }

  RankBounds bounds;
  switch (structure) {
    case StructureClass::General:
      bounds.min_rank = max_block_rank;
      bounds.max_rank = std::min(total, gap_term);
      break;
    case StructureClass::Symmetric:
      bounds.max_rank = std::min(total, gap_term);
      break;
    case StructureClass::Antisymmetric:
      bounds.min_rank = max_block_rank;
      bounds.max_rank = std::min(even_part(total), gap_term);
      break;
  }
  return bounds;
}

RankBounds rank_bounds(const BlockDiagonalPartial& p) {
  return rank_bounds(p.structure(), p.sizes(), p.ranks());
}

}  // namespace bdc
