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
#include <vector>

#include "bdc/partial.hpp"

namespace bdc {

enum class Target { Min, Max };

const char* to_string(Target t) noexcept;

/// A completion together with the extremal rank it realises and a trace of
/// the construction cases taken.
struct CompletionCertificate {
  BlockDiagonalPartial partial;
  Matrix completed;
  Target target;
  std::size_t claimed_rank;
  std::vector<std::string> construction_log;
};

// Each constructor throws StructureViolation when the partial's structure
// class does not match, and CharacteristicTwo for symmetric/antisymmetric
// input over GF(2). The result is checked before it is returned; a failed
// check raises InternalError.

/// Maximum-rank symmetric completion.
CompletionCertificate complete_symmetric_max(const BlockDiagonalPartial& p);
/// Completion of rank max r_i with zero-diagonal antisymmetric fill.
CompletionCertificate complete_antisymmetric_min(const BlockDiagonalPartial& p);
/// Completion of rank min(<S>, 2(S - n_k) + r_k).
CompletionCertificate complete_antisymmetric_max(const BlockDiagonalPartial& p);
CompletionCertificate complete_general_min(const BlockDiagonalPartial& p);
CompletionCertificate complete_general_max(const BlockDiagonalPartial& p);

/// Dispatch on the partial's structure. Symmetric min raises UnsupportedTarget.
CompletionCertificate complete(const BlockDiagonalPartial& p, Target target);

struct CompletionCheck {
  bool shape_ok = false;
  bool restriction_ok = false;
  bool structure_ok = false;
  bool within_bounds = false;
  std::size_t rank = 0;

  bool passed() const noexcept { return shape_ok && restriction_ok && structure_ok && within_bounds; }
};

/// Checks that `m` is a completion of `p` respecting its structure class and
/// that its rank lies within the rank bounds (an unknown minimum counts as 0).
CompletionCheck check_completion(const BlockDiagonalPartial& p, const Matrix& m);

struct CertificateCheck {
  CompletionCheck completion;
  bool claimed_matches_rank = false;
  bool claimed_matches_bound = false;

  bool passed() const noexcept { return completion.passed() && claimed_matches_rank && claimed_matches_bound; }
};

CertificateCheck check_certificate(const CompletionCertificate& c);

}  // namespace bdc
