#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linearr/geometry.hpp"

namespace linearr {

/// A rank-2 flat: a multiple point together with every line through it.
struct Flat {
  Point point;
  std::vector<int> lines;  // sorted indices into the arrangement

  int multiplicity() const { return static_cast<int>(lines.size()); }
  bool contains(int line) const;
};

/// Number of flats per multiplicity.
struct Census {
  std::map<int, int> counts;

  int t(int multiplicity) const;
  int max_multiplicity() const;
  /// Sum over flats of m(m-1)/2; equals d(d-1)/2 for a valid arrangement.
  long pair_count() const;
  /// "t3=12 t2=0": every multiplicity from the largest present down to 2.
  std::string to_string() const;

  friend bool operator==(const Census&, const Census&) = default;
};

/// Rank-2 part of the intersection lattice with pair lookup.
class Lattice {
 public:
  explicit Lattice(const Arrangement& a);

  int line_count() const { return d_; }
  /// Flats sorted lexicographically by their line lists.
  const std::vector<Flat>& flats() const { return flats_; }
  /// Index of the flat through lines i != j.
  int flat_of(int i, int j) const { return pair_[static_cast<std::size_t>(i * d_ + j)]; }
  /// Flat indices on line i, ascending.
  const std::vector<int>& flats_on(int i) const { return on_line_[static_cast<std::size_t>(i)]; }
  Census census() const;
  int max_multiplicity() const;

 private:
  int d_;
  std::vector<Flat> flats_;
  std::vector<int> pair_;
  std::vector<std::vector<int>> on_line_;
};

std::vector<Flat> compute_flats(const Arrangement& a);
Census census(const Arrangement& a);
/// False iff all lines pass through one point.
bool is_essential(const Arrangement& a);

/// Canonical form of the line/flat incidence restricted to flats of
/// multiplicity >= 3, together with the line count. Equal codes exactly for
/// lattice-isomorphic arrangements.
struct IncidenceCode {
  int lines = 0;
  std::vector<int> code;

  friend bool operator==(const IncidenceCode&, const IncidenceCode&) = default;
  friend auto operator<=>(const IncidenceCode&, const IncidenceCode&) = default;
};

IncidenceCode incidence_code(const Arrangement& a);

/// Line ordering realising the canonical code: position t holds the original
/// index of the line placed t-th.
std::vector<int> canonical_ordering(const Lattice& lattice);

/// Witness bijection w (line i of a maps to line w[i] of b) when a and b are
/// lattice isomorphic, nullopt otherwise.
std::optional<std::vector<int>> lattice_isomorphism(const Arrangement& a, const Arrangement& b);

inline bool lattice_isomorphic(const Arrangement& a, const Arrangement& b) {
  return lattice_isomorphism(a, b).has_value();
}

/// True iff the bijection maps every flat of multiplicity >= 3 of a onto a
/// flat of b with the same multiplicity, and d matches.
bool is_lattice_isomorphism(const Lattice& a, const Lattice& b, const std::vector<int>& map);

}  // namespace linearr
