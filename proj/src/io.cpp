#include "linearr/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace linearr {

ParseError::ParseError(const std::string& source, int line, int column, const std::string& what)
    : DataError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view row) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < row.size()) {
    while (i < row.size() && (row[i] == ' ' || row[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < row.size() && row[i] != ' ' && row[i] != '\t') ++i;
    if (i > start) out.push_back({row.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Arrangement parse_arrangement(std::string_view text, const std::string& name) {
  std::optional<FieldKind> field;
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    const std::string_view body = trim(row);
    if (body.empty() || body.front() == '#') continue;

    if (!field) {
      constexpr std::string_view kHeader = "field:";
      if (body.substr(0, kHeader.size()) != kHeader)
        throw ParseError(name, number, static_cast<int>(row.find(body.front())) + 1,
                         "expected 'field: rational' or 'field: eisenstein'");
      const std::string_view value = trim(body.substr(kHeader.size()));
      try {
        field = parse_field_name(value);
      } catch (const DataError& e) {
        throw ParseError(name, number, static_cast<int>(row.find(kHeader)) + static_cast<int>(kHeader.size()) + 1,
                         e.what());
      }
      continue;
    }

    const auto tokens = split(row);
    if (tokens.size() != 3)
      throw ParseError(name, number, tokens.size() > 3 ? tokens[3].column : static_cast<int>(row.size()) + 1,
                       "expected 3 coefficients, found " + std::to_string(tokens.size()));
    Triple t;
    for (std::size_t i = 0; i < 3; ++i) {
      try {
        t[i] = parse_scalar(tokens[i].text, *field);
      } catch (const DataError& e) {
        throw ParseError(name, number, tokens[i].column, e.what());
      }
    }
    if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero())
      throw ParseError(name, number, tokens[0].column, "all coefficients are zero");
    lines.emplace_back(t);
  }
  if (!field) throw ParseError(name, number, 1, "missing field header");
  if (lines.empty()) throw ParseError(name, number, 1, "no lines");
  return Arrangement(name, *field, std::move(lines));
}

Arrangement load_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str(), path.stem().string());
}

std::string format_arrangement(const Arrangement& a) {
  std::string out = "# " + a.name() + "\nfield: " + std::string(field_name(a.field())) + "\n";
  for (const Line& l : a.lines()) out += l.to_string() + "\n";
  return out;
}

void save_arrangement(const Arrangement& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << format_arrangement(a);
}

}  // namespace linearr
