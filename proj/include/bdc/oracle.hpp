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

#include <cstdint>

#include "bdc/partial.hpp"

namespace bdc {

// Brute-force ground truth over small prime fields. Ranks are computed with a
// standalone residue kernel, not with bdc::rank.

inline constexpr std::uint64_t kDefaultOracleBudget = 200000;

struct OracleResult {
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  /// Completions accounted for; always q^u.
  std::uint64_t enumerated = 0;
};

struct OracleOptions {
  std::uint64_t budget = kDefaultOracleBudget;
  /// General structure only: enumerate every free entry except those in the
  /// last row, and resolve the last row exactly by linear algebra
  /// (its entries appear in no other row).
  bool eliminate_last_row = true;
};

/// u: one entry per unordered off-diagonal pair for symmetric and
/// antisymmetric partials, every off-block entry for general ones.
std::size_t free_entry_count(const BlockDiagonalPartial& p);

/// q^u, saturating at UINT64_MAX. Throws NonFiniteField over the rationals.
std::uint64_t completion_count(const BlockDiagonalPartial& p);

/// Exact min and max rank over every structure-respecting completion.
/// Throws NonFiniteField or BudgetExceeded (when q^u > budget).
OracleResult exhaustive_extremes(const BlockDiagonalPartial& p, const OracleOptions& options);
OracleResult exhaustive_extremes(const BlockDiagonalPartial& p, std::uint64_t budget = kDefaultOracleBudget);

/// Structure-respecting completion with seeded free entries: uniform residues
/// over GF(p), integers in [-9, 9] over the rationals.
Matrix random_completion(const BlockDiagonalPartial& p, std::uint64_t seed);

}  // namespace bdc
