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

// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: bdc_acceptance <path-to-bdc> <fixture-dir>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bdc/canonical.hpp"
#include "bdc/completion.hpp"
#include "bdc/error.hpp"
#include "bdc/oracle.hpp"
#include "support/generators.hpp"

using namespace bdc;

namespace {

using Shape = std::vector<std::size_t>;

const std::vector<Shape> kShapes{{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};

// Shapes whose block-content count times completion count exceeds this are
// sampled instead of enumerated.
constexpr std::uint64_t kFullEnumerationWork = 50'000'000;
constexpr std::uint64_t kOracleBudget = 50'000'000;
constexpr int kSampleSize = 50;

/// Collects the first few failure messages of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(describe());
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed";
    for (const auto& m : messages_) out << "\n    " << m;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string describe_shape(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::string describe(const BlockDiagonalPartial& p) {
  std::ostringstream out;
  out << to_string(p.structure()) << " over " << p.field().describe() << " sizes " << describe_shape(p.sizes())
      << " ranks " << describe_shape(p.ranks());
  return out.str();
}

/// Every block of size n with the given structure over GF(q).
std::vector<Matrix> all_blocks(const Field& f, StructureClass s, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s == StructureClass::General || (s == StructureClass::Symmetric && j >= i) ||
          (s == StructureClass::Antisymmetric && j > i)) {
        positions.emplace_back(i, j);
      }
    }
  const std::uint64_t q = f.modulus();
  std::vector<std::uint64_t> digits(positions.size(), 0);
  std::vector<Matrix> out;
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t e = 0; e < positions.size(); ++e) {
      const auto [i, j] = positions[e];
      m(i, j) = Scalar(f, static_cast<long long>(digits[e]));
      if (s == StructureClass::Symmetric) m(j, i) = m(i, j);
      if (s == StructureClass::Antisymmetric) m(j, i) = -m(i, j);
    }
    out.push_back(std::move(m));
    std::size_t e = positions.size();
    while (e > 0 && ++digits[e - 1] == q) digits[--e] = 0;
    if (e == 0) break;
  }
  return out;
}

/// min(S', 2(S - n_k) + r_k) with blocks sorted by size; S' = <S> for antisymmetric.
std::size_t max_formula(const BlockDiagonalPartial& p) {
  const auto sorted = sort_blocks_by_size(p).partial;
  const std::size_t total = sorted.total_size();
  const std::size_t k = sorted.block_count() - 1;
  const std::size_t gap = 2 * (total - sorted.sizes()[k]) + sorted.ranks()[k];
  const std::size_t cap = p.structure() == StructureClass::Antisymmetric ? even_part(total) : total;
  return std::min(cap, gap);
}

std::size_t min_formula(const BlockDiagonalPartial& p) {
  return *std::max_element(p.ranks().begin(), p.ranks().end());
}

/// Calls `visit` on every partial of the shape, or on a seeded sample when
/// the enumeration would be too large.
void for_each_instance(const Field& f, StructureClass s, const Shape& shape, std::uint64_t seed,
                       const std::function<void(const BlockDiagonalPartial&)>& visit, std::string& mode) {
  std::vector<std::vector<Matrix>> choices;
  std::uint64_t assignments = 1;
  for (std::size_t n : shape) {
    choices.push_back(all_blocks(f, s, n));
    assignments *= choices.back().size();
  }
  std::vector<Matrix> seedless;
  for (std::size_t n : shape) seedless.emplace_back(f, n, n);
  const std::uint64_t completions = completion_count(BlockDiagonalPartial(f, s, seedless));

  auto build = [&](const std::vector<std::size_t>& pick) {
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < shape.size(); ++b) blocks.push_back(choices[b][pick[b]]);
    return BlockDiagonalPartial(f, s, std::move(blocks));
  };

  if (assignments * completions <= kFullEnumerationWork) {
    mode = "all " + std::to_string(assignments);
    std::vector<std::size_t> pick(shape.size(), 0);
    while (true) {
      visit(build(pick));
      std::size_t b = shape.size();
      while (b > 0 && ++pick[b - 1] == choices[b - 1].size()) pick[--b] = 0;
      if (b == 0) break;
    }
  } else {
    mode = "sample " + std::to_string(kSampleSize) + "/" + std::to_string(assignments);
    testing::Rng rng(seed);
    for (int trial = 0; trial < kSampleSize; ++trial) {
      std::vector<std::size_t> pick;
      for (const auto& c : choices) pick.push_back(std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng));
      visit(build(pick));
    }
  }
}

void check_certificate_into(Tally& t, const CompletionCertificate& c, const char* what) {
  const auto check = check_certificate(c);
  t.expect(check.passed(), [&] { return std::string(what) + " certificate failed: " + describe(c.partial); });
}

// --- criteria ---------------------------------------------------------------

bool criterion_generators(std::string& detail) {
  const Field q = Field::rationals();
  Tally t;
  const Matrix t345 =
      Matrix::from_ints(q, {{0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  const Matrix e244 = Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const Matrix r456 = Matrix::from_ints(q, {{0, 1, 0, 0, 0, 0},
                                            {-1, 0, 0, 0, 0, 0},
                                            {0, 0, 0, 1, 0, 0},
                                            {0, 0, -1, 0, 0, 0},
                                            {0, 0, 0, 0, 0, 0}});
  t.expect(gen_T(q, 3, 4, 5) == t345, [] { return std::string("T(3,4,5) differs"); });
  t.expect(gen_E(q, 2, 4, 4) == e244, [] { return std::string("E(2,4,4) differs"); });
  t.expect(gen_R(q, 4, 5, 6) == r456, [] { return std::string("R(4,5,6) differs"); });
  detail = t.summary();
  return t.ok();
}

bool criterion_symmetric(std::string& detail) {
  Tally t;
  const Field f = Field::prime(3);
  std::ostringstream modes;
  for (const auto& shape : kShapes) {
    std::string mode;
    for_each_instance(
        f, StructureClass::Symmetric, shape, 1000 + shape.size(),
        [&](const BlockDiagonalPartial& p) {
          const auto c = complete_symmetric_max(p);
          check_certificate_into(t, c, "symmetric max");
          const std::size_t formula = max_formula(p);
          const auto oracle = exhaustive_extremes(p, kOracleBudget);
          t.expect(c.claimed_rank == formula && formula == oracle.max_rank, [&] {
            return describe(p) + ": constructor " + std::to_string(c.claimed_rank) + ", formula " +
                   std::to_string(formula) + ", oracle " + std::to_string(oracle.max_rank);
          });
        },
        mode);
    modes << " " << describe_shape(shape) << ":" << mode;
  }
  detail = t.summary() + ";" + modes.str();
  return t.ok();
}

bool criterion_antisymmetric(std::string& detail) {
  Tally t;
  std::ostringstream modes;
  for (const Field& f : {Field::prime(3), Field::prime(5)}) {
    for (const auto& shape : kShapes) {
      std::string mode;
      for_each_instance(
          f, StructureClass::Antisymmetric, shape, 2000 + shape.size(),
          [&](const BlockDiagonalPartial& p) {
            const auto cmin = complete_antisymmetric_min(p);
            const auto cmax = complete_antisymmetric_max(p);
            check_certificate_into(t, cmin, "antisymmetric min");
            check_certificate_into(t, cmax, "antisymmetric max");
            const auto oracle = exhaustive_extremes(p, kOracleBudget);
            const std::size_t lo = min_formula(p);
            const std::size_t hi = max_formula(p);
            t.expect(cmin.claimed_rank == lo && lo == oracle.min_rank, [&] {
              return describe(p) + ": min constructor " + std::to_string(cmin.claimed_rank) + ", formula " +
                     std::to_string(lo) + ", oracle " + std::to_string(oracle.min_rank);
            });
            t.expect(cmax.claimed_rank == hi && hi == oracle.max_rank, [&] {
              return describe(p) + ": max constructor " + std::to_string(cmax.claimed_rank) + ", formula " +
                     std::to_string(hi) + ", oracle " + std::to_string(oracle.max_rank);
            });
          },
          mode);
      modes << " GF(" << f.modulus() << ")" << describe_shape(shape) << ":" << mode;
    }
  }
  detail = t.summary() + ";" + modes.str();
  return t.ok();
}

bool criterion_general(std::string& detail) {
  Tally t;
  std::ostringstream modes;
  for (const Field& f : {Field::prime(2), Field::prime(3)}) {
    for (const auto& shape : kShapes) {
      std::string mode;
      for_each_instance(
          f, StructureClass::General, shape, 3000 + shape.size(),
          [&](const BlockDiagonalPartial& p) {
            const auto cmin = complete_general_min(p);
            const auto cmax = complete_general_max(p);
            check_certificate_into(t, cmin, "general min");
            check_certificate_into(t, cmax, "general max");
            const auto oracle = exhaustive_extremes(p, kOracleBudget);
            const std::size_t lo = min_formula(p);
            const std::size_t hi = max_formula(p);
            t.expect(cmin.claimed_rank == lo && lo == oracle.min_rank, [&] {
              return describe(p) + ": min constructor " + std::to_string(cmin.claimed_rank) + ", formula " +
                     std::to_string(lo) + ", oracle " + std::to_string(oracle.min_rank);
            });
            t.expect(cmax.claimed_rank == hi && hi == oracle.max_rank, [&] {
              return describe(p) + ": max constructor " + std::to_string(cmax.claimed_rank) + ", formula " +
                     std::to_string(hi) + ", oracle " + std::to_string(oracle.max_rank);
            });
          },
          mode);
      modes << " GF(" << f.modulus() << ")" << describe_shape(shape) << ":" << mode;
    }
  }
  detail = t.summary() + ";" + modes.str();
  return t.ok();
}

bool criterion_rational_soundness(std::string& detail) {
  Tally t;
  const Field q = Field::rationals();
  testing::Rng rng(5005);
  for (StructureClass s : {StructureClass::General, StructureClass::Symmetric, StructureClass::Antisymmetric}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = testing::random_partial(q, s, testing::random_sizes(4, 5, rng), rng);
      const auto cmax = complete(p, Target::Max);
      check_certificate_into(t, cmax, "max");
      t.expect(cmax.claimed_rank == max_formula(p), [&] { return describe(p) + ": max rank differs from formula"; });
      if (s == StructureClass::Symmetric) continue;
      const auto cmin = complete(p, Target::Min);
      check_certificate_into(t, cmin, "min");
      t.expect(cmin.claimed_rank == min_formula(p), [&] { return describe(p) + ": min rank differs from formula"; });
    }
  }
  detail = t.summary();
  return t.ok();
}

bool criterion_congruence(std::string& detail) {
  Tally t;
  testing::Rng rng(6006);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(5), Field::prime(7)}) {
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = dim(rng);
      // Alternate fully random matrices with rank-deficient congruent ones.
      const Matrix sym = trial % 2 ? testing::random_symmetric(f, n, rng)
                                   : testing::random_block(f, StructureClass::Symmetric, n, rng);
      const auto s = symmetric_b_diagonalize(sym);
      t.expect(s.transform * sym * s.transform.transpose() == s.canonical && is_b_diagonal(s.canonical) &&
                   rank(s.canonical) == rank(sym),
               [&] { return "symmetric reduction failed over " + f.describe() + ":\n" + render(sym); });

      const Matrix skew = trial % 2 ? testing::random_antisymmetric(f, n, rng)
                                    : testing::random_block(f, StructureClass::Antisymmetric, n, rng);
      const auto k = skew_canonicalize(skew);
      const std::size_t r = rank(skew);
      t.expect(k.transform * skew * k.transform.transpose() == k.canonical && k.canonical == gen_R(f, r, n, n),
               [&] { return "skew reduction failed over " + f.describe() + ":\n" + render(skew); });
    }
  }
  detail = t.summary();
  return t.ok();
}

bool criterion_bound_dominance(std::string& detail) {
  Tally t;
  for (StructureClass s : {StructureClass::General, StructureClass::Symmetric, StructureClass::Antisymmetric}) {
    const std::size_t rank_step = s == StructureClass::Antisymmetric ? 2 : 1;
    for (std::size_t k = 1; k <= 4; ++k) {
      // Ascending sizes; permutations are checked below.
      std::vector<std::size_t> sizes(k, 1);
      while (true) {
        std::vector<std::size_t> ranks(k, 0);
        while (true) {
          const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
          for (std::size_t j = 0; j + 1 < k; ++j) {
            t.expect(2 * (total - sizes[j]) + ranks[j] >= total, [&] {
              return "gap term below S for sizes " + describe_shape(sizes) + " ranks " + describe_shape(ranks);
            });
          }
          const RankBounds reference = rank_bounds(s, sizes, ranks);
          std::vector<std::size_t> order(k);
          std::iota(order.begin(), order.end(), 0);
          do {
            std::vector<std::size_t> ps, pr;
            for (std::size_t i : order) {
              ps.push_back(sizes[i]);
              pr.push_back(ranks[i]);
            }
            t.expect(rank_bounds(s, ps, pr) == reference, [&] {
              return std::string(to_string(s)) + " bounds change under permutation of " + describe_shape(sizes);
            });
          } while (std::next_permutation(order.begin(), order.end()));

          std::size_t i = k;
          while (i > 0) {
            ranks[i - 1] += rank_step;
            if (ranks[i - 1] <= sizes[i - 1]) break;
            ranks[i - 1] = 0;
            --i;
          }
          if (i == 0) break;
        }
        // Next non-decreasing size tuple.
        std::size_t i = k;
        while (i > 0 && sizes[i - 1] == 5) --i;
        if (i == 0) break;
        ++sizes[i - 1];
        for (std::size_t j = i; j < k; ++j) sizes[j] = sizes[i - 1];
      }
    }
  }
  detail = t.summary();
  return t.ok();
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

bool criterion_cli(const std::string& cli, const std::string& fixtures, std::string& detail) {
  Tally t;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
    if (entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  t.expect(files.size() == 20, [&] { return "expected 20 fixtures, found " + std::to_string(files.size()); });
  std::size_t symmetric = 0;
  for (const auto& file : files) {
    const std::string f = quoted(file.string());
    const std::string c = quoted(cli);
    const int code = shell(c + " complete --target max " + f + " | " + c + " verify " + f + " - >/dev/null");
    t.expect(code == 0, [&] { return file.filename().string() + ": max round trip exited " + std::to_string(code); });
    if (file.filename().string().find("symmetric") == 0) {
      ++symmetric;
      const int min_code = shell(c + " complete --target min " + f + " >/dev/null 2>&1");
      t.expect(min_code == 3,
               [&] { return file.filename().string() + ": symmetric min exited " + std::to_string(min_code); });
    }
  }
  t.expect(symmetric > 0, [] { return std::string("no symmetric fixtures"); });
  detail = t.summary() + "; " + std::to_string(symmetric) + " symmetric";
  return t.ok();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: bdc_acceptance <path-to-bdc> <fixture-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string fixtures = argv[2];

  struct Criterion {
    const char* name;
    double seconds_target;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1 generator fidelity", 1, criterion_generators},
      {"2 symmetric maximum over GF(3)", 60, criterion_symmetric},
      {"3 antisymmetric extremes over GF(3), GF(5)", 60, criterion_antisymmetric},
      {"4 general extremes over GF(2), GF(3)", 60, criterion_general},
      {"5 rational soundness", 120, criterion_rational_soundness},
      {"6 congruence suite", 60, criterion_congruence},
      {"7 bound dominance", 30, criterion_bound_dominance},
      {"8 CLI round trip", 10, [&](std::string& d) { return criterion_cli(cli, fixtures, d); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.seconds_target;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, target < %.0f s", seconds, c.seconds_target);
    std::cout << (ok && in_time ? "PASS" : "FAIL") << "  criterion " << c.name << " (" << timing << ")"
              << (in_time ? "" : " [too slow]") << ": " << detail << std::endl;
    all = all && ok && in_time;
  }
  return all ? 0 : 1;
}
