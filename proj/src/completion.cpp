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

#include "bdc/completion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bdc/canonical.hpp"
#include "bdc/error.hpp"

namespace bdc {

const char* to_string(Target t) noexcept { return t == Target::Min ? "min" : "max"; }

namespace {

std::string join_sizes(std::span<const std::size_t> values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ')';
  return out.str();
}

/// A block brought to canonical form; original == left_inverse * canonical * right_inverse.
struct ReducedBlock {
  Matrix canonical;
  Matrix left_inverse;
  Matrix right_inverse;
};

ReducedBlock reduce(const Matrix& block, StructureClass structure) {
  switch (structure) {
    case StructureClass::Symmetric: {
      auto red = symmetric_b_diagonalize(block);
      Matrix right = red.inverse_transform.transpose();
      return ReducedBlock{std::move(red.canonical), std::move(red.inverse_transform), std::move(right)};
    }
    case StructureClass::Antisymmetric: {
      auto red = skew_canonicalize(block);
      Matrix right = red.inverse_transform.transpose();
      return ReducedBlock{std::move(red.canonical), std::move(red.inverse_transform), std::move(right)};
    }
    case StructureClass::General: {
      auto red = rank_normal_form(block);
      return ReducedBlock{std::move(red.canonical), std::move(red.left_inverse), std::move(red.right_inverse)};
    }
  }
  throw Error(ErrorCode::InternalError, "unknown structure class");
}

/// [[upper, -+T^t], [T^t, lower]]; the upper-right fill is negated for
/// antisymmetric completions.
Matrix join_with_t(const Matrix& upper, const Matrix& lower, std::size_t t, StructureClass structure) {
  const Field& field = upper.field();
  const std::size_t a = upper.rows();
  const std::size_t b = lower.rows();
  Matrix out(field, a + b, a + b);
  out.set_block(0, 0, upper);
  out.set_block(a, a, lower);
  Matrix upper_right = gen_T(field, t, a, b);
  if (structure == StructureClass::Antisymmetric) upper_right = -upper_right;
  out.set_block(0, a, upper_right);
  out.set_block(a, 0, gen_T(field, t, b, a));
  return out;
}

/// diag(left_1, ..., left_k) * m * diag(right_1, ..., right_k).
Matrix pull_back(const Matrix& m, std::span<const ReducedBlock> reduced) {
  std::vector<Matrix> lefts;
  std::vector<Matrix> rights;
  for (const auto& r : reduced) {
    lefts.push_back(r.left_inverse);
    rights.push_back(r.right_inverse);
  }
  return block_diag(lefts) * m * block_diag(rights);
}

std::size_t sum(std::span<const std::size_t> values) {
  return std::accumulate(values.begin(), values.end(), std::size_t{0});
}

/// Maximum-rank completion of diag(blocks) where every block is already in
/// canonical form and sizes are nondecreasing. Follows the induction on k.
Matrix fill_max(std::span<const Matrix> blocks, std::span<const std::size_t> sizes,
                std::span<const std::size_t> ranks, StructureClass structure, std::vector<std::string>& log,
                std::size_t depth) {
  const std::string indent(2 * depth, ' ');
  const std::size_t k = blocks.size();
  if (k == 1) {
    log.push_back(indent + "k=1: nothing to fill");
    return blocks.front();
  }
  const std::size_t n1 = sizes[0];
  const std::size_t r1 = ranks[0];

  if (k == 2) {
    const std::size_t n2 = sizes[1];
    const std::size_t r2 = ranks[1];
    const std::size_t t = std::max(n1 - r1, n2 - r2);
    if (t <= n1) {
      log.push_back(indent + "k=2: t=" + std::to_string(t) + " <= n1=" + std::to_string(n1) +
                    ", fill T^" + std::to_string(t));
      return join_with_t(blocks[0], blocks[1], t, structure);
    }
    log.push_back(indent + "k=2: t=" + std::to_string(t) + " > n1=" + std::to_string(n1) + ", fill T^" +
                  std::to_string(n1));
    return join_with_t(blocks[0], blocks[1], n1, structure);
  }

  const std::size_t s = sum(sizes.first(k - 1));
  const std::size_t nk = sizes[k - 1];
  const std::size_t rk = ranks[k - 1];
  if (nk - rk >= s) {
    log.push_back(indent + "k=" + std::to_string(k) + ": n_k-r_k=" + std::to_string(nk - rk) +
                  " >= s=" + std::to_string(s) + ", fill T^" + std::to_string(s) + " against Diag(A_1..A_{k-1})");
    const Matrix head = block_diag(blocks.first(k - 1));
    return join_with_t(head, blocks[k - 1], s, structure);
  }

  const auto tail_sizes = sizes.subspan(1);
  const auto tail_ranks = ranks.subspan(1);
  const std::size_t tail_total = sum(tail_sizes);
  const std::size_t tail_target = rank_bounds(structure, tail_sizes, tail_ranks).max_rank;
  log.push_back(indent + "k=" + std::to_string(k) + ": n_k-r_k=" + std::to_string(nk - rk) + " < s=" +
                std::to_string(s) + ", recurse on blocks 2..k (target " + std::to_string(tail_target) + ")");
  const Matrix tail = fill_max(blocks.subspan(1), tail_sizes, tail_ranks, structure, log, depth + 1);

  const std::size_t full_rank =
      structure == StructureClass::Antisymmetric ? even_part(tail_total) : tail_total;
  std::size_t t = 0;
  if (tail_target == full_rank) {
    t = n1 - r1;
    log.push_back(indent + "  tail completion has full rank " + std::to_string(tail_target) + "; t=n1-r1=" +
                  std::to_string(t));
  } else {
    t = std::max(n1 - r1, tail_total - tail_target);
    log.push_back(indent + "  tail completion has rank " + std::to_string(tail_target) + "; t=" +
                  std::to_string(t));
  }
  if (t > n1) {
    throw Error(ErrorCode::InternalError, "fill width t=" + std::to_string(t) + " exceeds n1=" + std::to_string(n1));
  }

  const ReducedBlock tail_reduced = reduce(tail, structure);
  if (rank(tail_reduced.canonical) != tail_target) {
    throw Error(ErrorCode::InternalError, "recursive completion missed its target rank");
  }
  const Matrix joined = join_with_t(blocks[0], tail_reduced.canonical, t, structure);
  const ReducedBlock identity_head{blocks[0], Matrix::identity(blocks[0].field(), n1),
                                   Matrix::identity(blocks[0].field(), n1)};
  const ReducedBlock parts[] = {identity_head, tail_reduced};
  return pull_back(joined, parts);
}

/// Rearranges a completion of the sorted partial back into the original block order.
Matrix unpermute(const Matrix& sorted_completion, const BlockDiagonalPartial& original,
                 const SortedPartial& sorted) {
  std::vector<std::size_t> position(original.total_size());
  for (std::size_t nb = 0; nb < sorted.permutation.size(); ++nb) {
    const std::size_t old = sorted.permutation[nb];
    for (std::size_t x = 0; x < original.sizes()[old]; ++x) {
      position[original.offsets()[old] + x] = sorted.partial.offsets()[nb] + x;
    }
  }
  Matrix out(original.field(), original.total_size(), original.total_size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = sorted_completion(position[i], position[j]);
  return out;
}

void require_structure(const BlockDiagonalPartial& p, StructureClass expected) {
  if (p.structure() != expected) {
    throw Error(ErrorCode::StructureViolation, std::string("constructor expects a ") + to_string(expected) +
                                                   " partial, got " + to_string(p.structure()));
  }
  if (expected != StructureClass::General && p.field().characteristic() == 2) {
    throw Error(ErrorCode::CharacteristicTwo, "characteristic 2 is not supported for this structure");
  }
}

CompletionCertificate finish(const BlockDiagonalPartial& p, Matrix completed, Target target,
                             std::vector<std::string> log) {
  const RankBounds bounds = rank_bounds(p);
  const std::size_t claimed = target == Target::Max ? bounds.max_rank : bounds.min_rank.value();
  CompletionCertificate cert{p, std::move(completed), target, claimed, std::move(log)};
  const CertificateCheck check = check_certificate(cert);
  if (!check.passed()) {
    throw Error(ErrorCode::InternalError, "constructed completion has rank " + std::to_string(check.completion.rank) +
                                              ", expected " + std::to_string(claimed));
  }
  return cert;
}

CompletionCertificate complete_max(const BlockDiagonalPartial& p, StructureClass structure) {
  require_structure(p, structure);
  const SortedPartial sorted = sort_blocks_by_size(p);
  std::vector<std::string> log;
  log.push_back("sorted sizes " + join_sizes(sorted.partial.sizes()) + " ranks " +
                join_sizes(sorted.partial.ranks()) + " from order " + join_sizes(sorted.permutation));

  std::vector<ReducedBlock> reduced;
  std::vector<Matrix> canonical;
  for (const auto& block : sorted.partial.blocks()) {
    reduced.push_back(reduce(block, structure));
    canonical.push_back(reduced.back().canonical);
  }
  const Matrix filled =
      fill_max(canonical, sorted.partial.sizes(), sorted.partial.ranks(), structure, log, 0);
  const Matrix pulled = pull_back(filled, reduced);
  return finish(p, unpermute(pulled, p, sorted), Target::Max, std::move(log));
}

/// Fill block (i, j) with the generator of rank min(r_i, r_j).
CompletionCertificate complete_min(const BlockDiagonalPartial& p, StructureClass structure) {
  require_structure(p, structure);
  const Field& field = p.field();
  std::vector<ReducedBlock> reduced;
  for (const auto& block : p.blocks()) reduced.push_back(reduce(block, structure));

  Matrix filled(field, p.total_size(), p.total_size());
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    for (std::size_t j = 0; j < p.block_count(); ++j) {
      const std::size_t r = std::min(p.ranks()[i], p.ranks()[j]);
      const std::size_t m = p.sizes()[i];
      const std::size_t n = p.sizes()[j];
      const Matrix fill = structure == StructureClass::Antisymmetric ? gen_R(field, r, m, n) : gen_E(field, r, m, n);
      filled.set_block(p.offsets()[i], p.offsets()[j], i == j ? reduced[i].canonical : fill);
    }
  }
  std::vector<std::string> log;
  log.push_back(std::string("block ranks ") + join_sizes(p.ranks()) + "; fill block (i,j) with " +
                (structure == StructureClass::Antisymmetric ? "R" : "E") + "^min(r_i,r_j)");
  return finish(p, pull_back(filled, reduced), Target::Min, std::move(log));
}

}  // namespace

CompletionCertificate complete_symmetric_max(const BlockDiagonalPartial& p) {
  return complete_max(p, StructureClass::Symmetric);
}

CompletionCertificate complete_antisymmetric_min(const BlockDiagonalPartial& p) {
  return complete_min(p, StructureClass::Antisymmetric);
}

CompletionCertificate complete_antisymmetric_max(const BlockDiagonalPartial& p) {
  return complete_max(p, StructureClass::Antisymmetric);
}

CompletionCertificate complete_general_min(const BlockDiagonalPartial& p) {
  return complete_min(p, StructureClass::General);
}

CompletionCertificate complete_general_max(const BlockDiagonalPartial& p) {
  return complete_max(p, StructureClass::General);
}

CompletionCertificate complete(const BlockDiagonalPartial& p, Target target) {
  switch (p.structure()) {
    case StructureClass::General:
      return target == Target::Min ? complete_general_min(p) : complete_general_max(p);
    case StructureClass::Antisymmetric:
      return target == Target::Min ? complete_antisymmetric_min(p) : complete_antisymmetric_max(p);
    case StructureClass::Symmetric:
      if (target == Target::Min) {
        throw Error(ErrorCode::UnsupportedTarget,
                    "the minimum rank of symmetric completions is not determined by a closed form");
      }
      return complete_symmetric_max(p);
  }
  throw Error(ErrorCode::InternalError, "unknown structure class");
}

CompletionCheck check_completion(const BlockDiagonalPartial& p, const Matrix& m) {
  CompletionCheck check;
  check.shape_ok = m.field() == p.field() && m.rows() == p.total_size() && m.cols() == p.total_size();
  if (!check.shape_ok) return check;
  check.restriction_ok = true;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const std::size_t o = p.offsets()[b];
    if (!(m.submatrix(o, o, p.sizes()[b], p.sizes()[b]) == p.block(b))) {
      check.restriction_ok = false;
      break;
    }
  }
  switch (p.structure()) {
    case StructureClass::General: check.structure_ok = true; break;
    case StructureClass::Symmetric: check.structure_ok = is_symmetric(m); break;
    case StructureClass::Antisymmetric: check.structure_ok = is_antisymmetric(m); break;
  }
  check.rank = rank(m);
  const RankBounds bounds = rank_bounds(p);
  check.within_bounds = check.rank <= bounds.max_rank && check.rank >= bounds.min_rank.value_or(0);
  return check;
}

CertificateCheck check_certificate(const CompletionCertificate& c) {
  CertificateCheck check;
  check.completion = check_completion(c.partial, c.completed);
  check.claimed_matches_rank = check.completion.shape_ok && check.completion.rank == c.claimed_rank;
  const RankBounds bounds = rank_bounds(c.partial);
  const std::optional<std::size_t> bound = c.target == Target::Max ? std::optional(bounds.max_rank) : bounds.min_rank;
  check.claimed_matches_bound = bound.has_value() && *bound == c.claimed_rank;
  return check;
}

}  // namespace bdc
