#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace linearr {

/// q x q array over the symbols 1..q with no repeat in any row or column.
class LatinSquare {
 public:
  /// Throws std::invalid_argument unless the rows form a Latin square.
  explicit LatinSquare(std::vector<std::vector<int>> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  LatinSquare transpose() const;
  /// Rows, columns and symbols permuted: entry (rp[r], cp[c]) of the result
  /// is sp[at(r, c) - 1] + 1. All permutations are 0-based.
  LatinSquare permuted(const std::vector<int>& rp, const std::vector<int>& cp, const std::vector<int>& sp) const;
  /// Reassign roles of (row, column, symbol) so that role i of the result
  /// is role roles[i] of this square.
  LatinSquare conjugate(const std::array<int, 3>& roles) const;

  /// q text lines of space-separated symbols.
  std::string to_string() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

bool is_latin(const std::vector<std::vector<int>>& rows);

/// Least square, in row-major order, over the paratopy orbit.
struct MainClassCode {
  LatinSquare representative;

  friend bool operator==(const MainClassCode&, const MainClassCode&) = default;
  friend auto operator<=>(const MainClassCode&, const MainClassCode&) = default;
};

/// Brute force over the full group; intended for q <= 5.
MainClassCode main_class_code(const LatinSquare& s);

/// All Latin squares of order q (1..4), grouped by main class.
struct LatinInventory {
  int order;
  std::map<MainClassCode, std::vector<LatinSquare>> classes;

  std::size_t square_count() const;
  std::size_t class_count() const { return classes.size(); }
};

LatinInventory enumerate_latin_squares(int q);

/// Addition table of Z/q, entries shifted to 1..q.
LatinSquare cyclic_square(int q);
/// Addition table of Z/2 x Z/2.
LatinSquare klein_square();

}  // namespace linearr
