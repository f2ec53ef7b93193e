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

#include "bdc/text.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "bdc/error.hpp"

namespace bdc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back(Line{number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Field parse_field_line(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() == 2 && t[1] == "rational") return Field::rationals();
  if (t.size() == 3 && t[1] == "prime") {
    const auto p = parse_count(t[2]);
    if (!p) throw Error::at_line(ErrorCode::SyntaxError, line.number, "malformed modulus '" + std::string(t[2]) + "'");
    try {
      return Field::prime(*p);
    } catch (const Error& e) {
      throw Error::at_line(e.code(), line.number, "field prime " + std::to_string(*p) + ": not a supported prime");
    }
  }
  throw Error::at_line(ErrorCode::SyntaxError, line.number, "expected 'field rational' or 'field prime <p>'");
}

std::vector<Scalar> parse_row(const Line& line, const Field& field) {
  std::vector<Scalar> row;
  row.reserve(line.tokens.size());
  for (auto token : line.tokens) {
    try {
      row.push_back(Scalar::parse(field, token));
    } catch (const Error& e) {
      throw Error::at_line(ErrorCode::SyntaxError, line.number, e.what());
    }
  }
  return row;
}

bool is_rank_line(const Line& line) {
  return line.tokens.size() == 1 && line.tokens.front().starts_with("rank=");
}

Matrix rows_to_matrix(const std::vector<Line>& lines, std::size_t from, const Field& field) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t width = 0;
  for (std::size_t i = from; i < lines.size(); ++i) {
    if (is_rank_line(lines[i])) continue;
    auto row = parse_row(lines[i], field);
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw Error::at_line(ErrorCode::SyntaxError, lines[i].number,
                           "expected " + std::to_string(width) + " entries, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::SyntaxError, "no matrix rows");
  return Matrix::from_rows(field, rows);
}

}  // namespace

BlockDiagonalPartial parse_partial(std::string_view text) {
  const auto lines = content_lines(text);
  std::optional<Field> field;
  std::optional<StructureClass> structure;
  std::vector<Matrix> blocks;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const auto keyword = line.tokens.front();
    if (keyword == "field") {
      if (field) throw Error::at_line(ErrorCode::SyntaxError, line.number, "duplicate field line");
      if (!blocks.empty()) throw Error::at_line(ErrorCode::SyntaxError, line.number, "field after blocks");
      field = parse_field_line(line);
      ++i;
    } else if (keyword == "structure") {
      if (structure) throw Error::at_line(ErrorCode::SyntaxError, line.number, "duplicate structure line");
      if (!blocks.empty()) throw Error::at_line(ErrorCode::SyntaxError, line.number, "structure after blocks");
      if (line.tokens.size() != 2) {
        throw Error::at_line(ErrorCode::SyntaxError, line.number, "expected 'structure <class>'");
      }
      const auto name = line.tokens[1];
      if (name == "general") {
        structure = StructureClass::General;
      } else if (name == "symmetric") {
        structure = StructureClass::Symmetric;
      } else if (name == "antisymmetric") {
        structure = StructureClass::Antisymmetric;
      } else {
        throw Error::at_line(ErrorCode::SyntaxError, line.number, "unknown structure '" + std::string(name) + "'");
      }
      ++i;
    } else if (keyword == "block") {
      if (!field || !structure) {
        throw Error::at_line(ErrorCode::SyntaxError, line.number, "'field' and 'structure' must precede blocks");
      }
      const auto n = line.tokens.size() == 2 ? parse_count(line.tokens[1]) : std::nullopt;
      if (!n || *n == 0) throw Error::at_line(ErrorCode::SyntaxError, line.number, "expected 'block <n>' with n >= 1");
      if (*n >= lines.size() - i) {
        throw Error::at_line(ErrorCode::SyntaxError, line.number, "block needs " + std::to_string(*n) + " rows");
      }
      Matrix block(*field, *n, *n);
      for (std::size_t r = 0; r < *n; ++r) {
        const Line& row_line = lines[i + 1 + r];
        if (row_line.tokens.front() == "block") {
          throw Error::at_line(ErrorCode::SyntaxError, row_line.number, "block ended early");
        }
        const auto row = parse_row(row_line, *field);
        if (row.size() != *n) {
          throw Error::at_line(ErrorCode::SyntaxError, row_line.number,
                               "expected " + std::to_string(*n) + " entries, got " + std::to_string(row.size()));
        }
        for (std::size_t c = 0; c < *n; ++c) block(r, c) = row[c];
      }
      blocks.push_back(std::move(block));
      i += 1 + *n;
    } else {
      throw Error::at_line(ErrorCode::SyntaxError, line.number, "unexpected '" + std::string(keyword) + "'");
    }
  }
  if (!field) throw Error(ErrorCode::SyntaxError, "missing 'field' line");
  if (!structure) throw Error(ErrorCode::SyntaxError, "missing 'structure' line");
  return BlockDiagonalPartial(*field, *structure, std::move(blocks));
}

std::string render_partial(const BlockDiagonalPartial& p) {
  std::ostringstream out;
  out << "field " << p.field().describe() << '\n';
  out << "structure " << to_string(p.structure()) << '\n';
  for (const auto& block : p.blocks()) out << "block " << block.rows() << '\n' << render(block);
  return out.str();
}

Matrix parse_matrix(std::string_view text, const Field& field) { return rows_to_matrix(content_lines(text), 0, field); }

MatrixFile parse_matrix_file(std::string_view text) {
  const auto lines = content_lines(text);
  if (!lines.empty() && lines.front().tokens.front() == "field") {
    const Field field = parse_field_line(lines.front());
    return MatrixFile{field, rows_to_matrix(lines, 1, field)};
  }
  return MatrixFile{Field::rationals(), rows_to_matrix(lines, 0, Field::rationals())};
}

}  // namespace bdc
