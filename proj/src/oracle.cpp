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

#include "bdc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "bdc/error.hpp"

namespace bdc {

namespace {

/// Residue arithmetic with lookup tables for small moduli.
class Residues {
 public:
  explicit Residues(std::uint32_t p) : p_(p) {
    if (p <= kInverseTableLimit) {
      // inv(a) = -(p / a) * inv(p mod a)
      inv_.assign(p, 0);
      if (p > 1) inv_[1] = 1;
      for (std::uint32_t a = 2; a < p; ++a) {
        inv_[a] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(p - p / a) * inv_[p % a] % p);
      }
    }
    if (p <= kTableLimit) {
      mul_.resize(static_cast<std::size_t>(p) * p);
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) mul_[a * p + b] = static_cast<std::uint32_t>(a * b % p);
    }
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t inv(std::uint32_t a) const {
    if (!inv_.empty()) return inv_[a];
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1U) {
      if (e & 1U) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<std::uint32_t>(result);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_.empty()) return mul_[a * p_ + b];
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  /// a + c*b
  std::uint32_t axpy(std::uint32_t a, std::uint32_t c, std::uint32_t b) const {
    std::uint32_t s = a + mul(c, b);
    return s >= p_ ? s - p_ : s;
  }

 private:
  static constexpr std::uint32_t kTableLimit = 256;
  static constexpr std::uint32_t kInverseTableLimit = 1U << 16;
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> mul_;
};

/// Row-echelon reduction in place; returns the pivot column of each basis row.
std::vector<std::size_t> echelonize(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                                    const Residues& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint32_t inv = f.inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint32_t x = a[i * cols + c];
      if (x == 0) continue;
      const std::uint32_t factor = f.neg(f.mul(x, inv));
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = f.axpy(a[i * cols + j], factor, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Reduces v against echelon rows of `basis`.
void reduce_against(std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& basis,
                    const std::vector<std::size_t>& pivots, std::size_t cols, const Residues& f) {
  for (std::size_t b = 0; b < pivots.size(); ++b) {
    const std::size_t c = pivots[b];
    if (v[c] == 0) continue;
    const std::uint32_t factor = f.neg(f.mul(v[c], f.inv(basis[b * cols + c])));
    for (std::size_t j = c; j < cols; ++j) v[j] = f.axpy(v[j], factor, basis[b * cols + j]);
  }
}

struct FreeEntry {
  std::size_t row;
  std::size_t col;
};

std::vector<std::size_t> block_of_index(const BlockDiagonalPartial& p) {
  std::vector<std::size_t> owner(p.total_size());
  for (std::size_t b = 0; b < p.block_count(); ++b)
    for (std::size_t x = 0; x < p.sizes()[b]; ++x) owner[p.offsets()[b] + x] = b;
  return owner;
}

/// Row-major free positions; upper triangle only for structured partials.
std::vector<FreeEntry> free_entries(const BlockDiagonalPartial& p) {
  const auto owner = block_of_index(p);
  const bool paired = p.structure() != StructureClass::General;
  std::vector<FreeEntry> out;
  for (std::size_t i = 0; i < p.total_size(); ++i)
    for (std::size_t j = paired ? i + 1 : 0; j < p.total_size(); ++j)
      if (owner[i] != owner[j]) out.push_back({i, j});
  return out;
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return result;
}

class Enumerator {
 public:
  Enumerator(const BlockDiagonalPartial& p, const Residues& f)
      : p_(p), f_(f), n_(p.total_size()), base_(n_ * n_, 0) {
    for (std::size_t b = 0; b < p.block_count(); ++b) {
      const std::size_t o = p.offsets()[b];
      for (std::size_t i = 0; i < p.sizes()[b]; ++i)
        for (std::size_t j = 0; j < p.sizes()[b]; ++j)
          base_[(o + i) * n_ + o + j] = static_cast<std::uint32_t>(p.block(b)(i, j).residue());
    }
  }

  OracleResult run_plain() {
    const auto entries = free_entries(p_);
    OracleResult result{n_, 0, 0};
    std::vector<std::uint32_t> current = base_;
    std::vector<std::uint32_t> digits(entries.size(), 0);
    std::vector<std::uint32_t> scratch(n_ * n_);
    while (true) {
      scratch = current;
      const std::size_t r = echelonize(scratch, n_, n_, f_).size();
      result.min_rank = std::min(result.min_rank, r);
      result.max_rank = std::max(result.max_rank, r);
      ++result.enumerated;
      if (!advance(entries, digits, current)) break;
    }
    return result;
  }

  /// General structure, k >= 2.
  OracleResult run_last_row_eliminated() {
    const auto all = free_entries(p_);
    std::vector<FreeEntry> head;
    std::vector<std::size_t> last_cols;
    for (const auto& e : all) {
      if (e.row + 1 == n_) {
        last_cols.push_back(e.col);
      } else {
        head.push_back(e);
      }
    }
    const std::uint64_t per_head = saturating_power(f_.p(), last_cols.size());
    OracleResult result{n_, 0, 0};
    std::vector<std::uint32_t> current = base_;
    std::vector<std::uint32_t> digits(head.size(), 0);
    const std::size_t top_rows = n_ - 1;
    std::vector<std::uint32_t> top(top_rows * n_);
    std::vector<std::uint32_t> fixed_part(n_);
    std::vector<std::uint32_t> directions(last_cols.size() * n_);
    std::vector<std::uint32_t> probe;
    while (true) {
      std::copy(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(top_rows * n_), top.begin());
      const auto pivots = echelonize(top, top_rows, n_, f_);
      const std::size_t r0 = pivots.size();

      // Last row = fixed_part + sum_l x_l e_{col_l}; reduce each piece modulo the top rows.
      std::copy(current.begin() + static_cast<std::ptrdiff_t>(top_rows * n_), current.end(), fixed_part.begin());
      reduce_against(fixed_part, top, pivots, n_, f_);
      std::fill(directions.begin(), directions.end(), 0U);
      for (std::size_t l = 0; l < last_cols.size(); ++l) {
        std::vector<std::uint32_t> unit(n_, 0);
        unit[last_cols[l]] = 1;
        reduce_against(unit, top, pivots, n_, f_);
        std::copy(unit.begin(), unit.end(), directions.begin() + static_cast<std::ptrdiff_t>(l * n_));
      }
      const std::size_t dir_rank = [&] {
        probe = directions;
        return echelonize(probe, last_cols.size(), n_, f_).size();
      }();
      probe = directions;
      probe.insert(probe.end(), fixed_part.begin(), fixed_part.end());
      const std::size_t aug_rank = echelonize(probe, last_cols.size() + 1, n_, f_).size();

      // Some choice leaves the last row outside the span iff the affine family is not identically 0;
      // some choice puts it inside iff fixed_part lies in the span of the directions.
      const std::size_t hi = r0 + (aug_rank > 0 ? 1 : 0);
      const std::size_t lo = r0 + (aug_rank > dir_rank ? 1 : 0);
      result.min_rank = std::min(result.min_rank, lo);
      result.max_rank = std::max(result.max_rank, hi);
      result.enumerated += per_head;
      if (!advance(head, digits, current)) break;
    }
    return result;
  }

 private:
  void write(const FreeEntry& e, std::uint32_t value, std::vector<std::uint32_t>& m) const {
    m[e.row * n_ + e.col] = value;
    switch (p_.structure()) {
      case StructureClass::General: break;
      case StructureClass::Symmetric: m[e.col * n_ + e.row] = value; break;
      case StructureClass::Antisymmetric: m[e.col * n_ + e.row] = f_.neg(value); break;
    }
  }

  /// Odometer step, last position fastest. Returns false after the final assignment.
  bool advance(const std::vector<FreeEntry>& entries, std::vector<std::uint32_t>& digits,
               std::vector<std::uint32_t>& m) const {
    for (std::size_t pos = entries.size(); pos-- > 0;) {
      if (++digits[pos] < f_.p()) {
        write(entries[pos], digits[pos], m);
        return true;
      }
      digits[pos] = 0;
      write(entries[pos], 0, m);
    }
    return false;
  }

  const BlockDiagonalPartial& p_;
  const Residues& f_;
  std::size_t n_;
  std::vector<std::uint32_t> base_;
};

}  // namespace

std::size_t free_entry_count(const BlockDiagonalPartial& p) { return free_entries(p).size(); }

std::uint64_t completion_count(const BlockDiagonalPartial& p) {
  if (!p.field().is_prime_field()) throw Error(ErrorCode::NonFiniteField, "enumeration needs a finite field");
  return saturating_power(p.field().modulus(), free_entry_count(p));
}

OracleResult exhaustive_extremes(const BlockDiagonalPartial& p, const OracleOptions& options) {
  const std::uint64_t count = completion_count(p);
  if (count > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(count) + " completions exceed the budget of " +
                                               std::to_string(options.budget));
  }
  const Residues f(static_cast<std::uint32_t>(p.field().modulus()));
  Enumerator enumerator(p, f);
  if (options.eliminate_last_row && p.structure() == StructureClass::General && p.block_count() >= 2) {
    return enumerator.run_last_row_eliminated();
  }
  return enumerator.run_plain();
}

OracleResult exhaustive_extremes(const BlockDiagonalPartial& p, std::uint64_t budget) {
  OracleOptions options;
  options.budget = budget;
  return exhaustive_extremes(p, options);
}

Matrix random_completion(const BlockDiagonalPartial& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Field& field = p.field();
  Matrix m = p.zero_fill();
  auto draw = [&]() -> Scalar {
    if (field.is_prime_field()) {
      std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
      return Scalar(field, static_cast<long long>(dist(rng)));
    }
    std::uniform_int_distribution<int> dist(-9, 9);
    return Scalar(field, dist(rng));
  };
  for (const auto& e : free_entries(p)) {
    const Scalar v = draw();
    m(e.row, e.col) = v;
    if (p.structure() == StructureClass::Symmetric) m(e.col, e.row) = v;
    if (p.structure() == StructureClass::Antisymmetric) m(e.col, e.row) = -v;
  }
  return m;
}

}  // namespace bdc
