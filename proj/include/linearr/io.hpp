#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "linearr/geometry.hpp"

namespace linearr {

/// Input error carrying a 1-based position in the source text.
class ParseError : public DataError {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Format: '#' comment lines, then "field: rational|eisenstein", then one
/// row of three scalar literals per line.
Arrangement parse_arrangement(std::string_view text, const std::string& name);
Arrangement load_arrangement(const std::filesystem::path& path);

/// Text accepted by parse_arrangement; comment line carries the name.
std::string format_arrangement(const Arrangement& a);
void save_arrangement(const Arrangement& a, const std::filesystem::path& path);

}  // namespace linearr
