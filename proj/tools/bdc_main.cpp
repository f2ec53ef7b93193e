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

// bdc: command-line front end over the C interface.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error,
// 3 unsupported target, 4 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bdcomplete.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;

struct PartialDeleter {
  void operator()(bdc_partial* p) const { bdc_partial_destroy(p); }
};
struct MatrixDeleter {
  void operator()(bdc_matrix* m) const { bdc_matrix_destroy(m); }
};
using PartialPtr = std::unique_ptr<bdc_partial, PartialDeleter>;
using MatrixPtr = std::unique_ptr<bdc_matrix, MatrixDeleter>;

/// Thrown to unwind to main with an exit code; the message is already printed.
struct ExitRequest {
  int code;
};

int exit_code_for(bdc_status status) {
  switch (status) {
    case BDC_OK: return kExitOk;
    case BDC_ERR_UNSUPPORTED_TARGET: return kExitUnsupported;
    case BDC_ERR_BUDGET_EXCEEDED: return kExitBudget;
    default: return kExitInput;
  }
}

void check(bdc_status status, const std::string& context) {
  if (status == BDC_OK) return;
  std::cerr << "bdc: " << context << ": " << bdc_last_error_message() << '\n';
  throw ExitRequest{exit_code_for(status)};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "bdc: cannot read '" << path << "'\n";
    throw ExitRequest{kExitInput};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PartialPtr load_partial(const std::string& path) {
  const std::string text = read_input(path);
  bdc_partial* raw = nullptr;
  check(bdc_partial_parse(text.c_str(), &raw), path);
  return PartialPtr(raw);
}

std::string render(const bdc_matrix* m) {
  char* raw = nullptr;
  check(bdc_matrix_render(m, &raw), "render");
  std::string out(raw);
  bdc_string_free(raw);
  return out;
}

int cmd_bounds(const std::string& file) {
  const auto partial = load_partial(file);
  int min_known = 0;
  size_t min_rank = 0;
  size_t max_rank = 0;
  check(bdc_partial_bounds(partial.get(), &min_known, &min_rank, &max_rank), "bounds");
  std::cout << "min=" << (min_known ? std::to_string(min_rank) : std::string("unknown")) << " max=" << max_rank
            << '\n';
  return kExitOk;
}

int cmd_complete(const std::string& file, const std::string& target, const std::string& out_path) {
  const auto partial = load_partial(file);
  bdc_matrix* raw = nullptr;
  size_t rank = 0;
  check(bdc_partial_complete(partial.get(), target == "min" ? BDC_TARGET_MIN : BDC_TARGET_MAX, &raw, &rank),
        "complete");
  const MatrixPtr completed(raw);

  bdc_verify_report report{};
  check(bdc_partial_verify(partial.get(), completed.get(), &report), "verify");
  if (!(report.shape_ok && report.restriction_ok && report.structure_ok && report.within_bounds) ||
      report.rank != rank) {
    std::cerr << "bdc: constructed completion failed re-verification\n";
    return kExitVerifyFailed;
  }

  const std::string text = render(completed.get()) + "rank=" + std::to_string(rank) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "bdc: cannot write '" << out_path << "'\n";
      return kExitInput;
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& completion_file) {
  const auto partial = load_partial(file);
  const std::string text = read_input(completion_file);
  bdc_matrix* raw = nullptr;
  check(bdc_partial_parse_matrix(partial.get(), text.c_str(), &raw), completion_file);
  const MatrixPtr completion(raw);

  bdc_verify_report report{};
  check(bdc_partial_verify(partial.get(), completion.get(), &report), "verify");
  bool ok = true;
  if (!report.shape_ok) {
    std::cout << "size mismatch\n";
    ok = false;
  } else {
    if (!report.restriction_ok) {
      std::cout << "restriction mismatch\n";
      ok = false;
    }
    if (!report.structure_ok) {
      std::cout << "structure violation\n";
      ok = false;
    }
    if (!report.within_bounds) {
      std::cout << "rank out of bounds\n";
      ok = false;
    }
  }
  std::cout << "rank=" << report.rank << " within_bounds=" << (report.within_bounds ? "true" : "false") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_canon(const std::string& file, const std::string& kind) {
  const std::string text = read_input(file);
  bdc_matrix* raw = nullptr;
  check(bdc_matrix_parse(text.c_str(), &raw), file);
  const MatrixPtr input(raw);

  bdc_matrix* canonical_raw = nullptr;
  bdc_matrix* transform_raw = nullptr;
  size_t rank = 0;
  check(bdc_matrix_canon(input.get(), kind == "sym" ? BDC_CANON_SYMMETRIC : BDC_CANON_SKEW, &canonical_raw,
                         &transform_raw, &rank),
        "canon");
  const MatrixPtr canonical(canonical_raw);
  const MatrixPtr transform(transform_raw);
  std::cout << "# canonical\n" << render(canonical.get()) << "# transform\n" << render(transform.get())
            << "rank=" << rank << '\n';
  return kExitOk;
}

int cmd_gen(const std::string& kind, std::size_t r, std::size_t m, std::size_t n, std::uint64_t prime) {
  const bdc_generator gen = kind == "T" ? BDC_GEN_T : kind == "E" ? BDC_GEN_E : BDC_GEN_R;
  bdc_matrix* raw = nullptr;
  check(bdc_generator_matrix(gen, r, m, n, prime, &raw), "gen");
  const MatrixPtr matrix(raw);
  std::cout << render(matrix.get());
  return kExitOk;
}

int cmd_oracle(const std::string& file, std::uint64_t limit) {
  const auto partial = load_partial(file);
  size_t min_rank = 0;
  size_t max_rank = 0;
  std::uint64_t enumerated = 0;
  check(bdc_partial_oracle(partial.get(), limit, &min_rank, &max_rank, &enumerated), "oracle");
  std::cout << "min=" << min_rank << " max=" << max_rank << " enumerated=" << enumerated << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal-rank completions of block-diagonal partial matrices"};
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string target = "max";
  std::string out_path;
  std::string kind;
  std::size_t r = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t prime = 0;
  std::uint64_t limit = 200000;

  auto* bounds = app.add_subcommand("bounds", "Print min/max completion rank");
  bounds->add_option("file", file, "Partial matrix file ('-' for stdin)")->required();

  auto* complete = app.add_subcommand("complete", "Construct an extremal completion");
  complete->add_option("file", file, "Partial matrix file ('-' for stdin)")->required();
  complete->add_option("--target", target, "min or max")->check(CLI::IsMember({"min", "max"}));
  complete->add_option("-o", out_path, "Write the completion to this path");

  auto* verify = app.add_subcommand("verify", "Check a completion against a partial matrix");
  verify->add_option("file", file, "Partial matrix file")->required();
  verify->add_option("completion", second, "Completion file ('-' for stdin)")->required();

  auto* canon = app.add_subcommand("canon", "Congruence canonical form of a matrix");
  canon->add_option("file", file, "Matrix file ('-' for stdin)")->required();
  canon->add_option("kind", kind, "sym or skew")->required()->check(CLI::IsMember({"sym", "skew"}));

  auto* gen = app.add_subcommand("gen", "Print a T, E or R generator matrix");
  gen->add_option("kind", kind, "T, E or R")->required()->check(CLI::IsMember({"T", "E", "R"}));
  gen->add_option("r", r, "rank")->required();
  gen->add_option("m", m, "rows")->required();
  gen->add_option("n", n, "columns")->required();
  gen->add_option("--prime", prime, "Entries over GF(p) instead of the rationals");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive min/max over all completions (finite fields)");
  oracle->add_option("file", file, "Partial matrix file ('-' for stdin)")->required();
  oracle->add_option("--limit", limit, "Maximum number of completions to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*bounds) return cmd_bounds(file);
    if (*complete) return cmd_complete(file, target, out_path);
    if (*verify) return cmd_verify(file, second);
    if (*canon) return cmd_canon(file, kind);
    if (*gen) return cmd_gen(kind, r, m, n, prime);
    if (*oracle) return cmd_oracle(file, limit);
  } catch (const ExitRequest& request) {
    return request.code;
  }
  return kExitInput;
}
