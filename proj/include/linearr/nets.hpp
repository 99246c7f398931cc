#pragma once

#include <optional>
#include <vector>

#include "linearr/latin.hpp"
#include "linearr/lattice.hpp"

namespace linearr {

/// Partition of all lines into k classes of q lines in which any two lines
/// from different classes meet in a point carrying exactly one line of each
/// class.
struct NetStructure {
  int k = 0;
  int q = 0;
  std::vector<std::vector<int>> classes;  // each sorted; ordered by first line
  std::vector<int> mixed_points;          // flat indices, ascending
  std::optional<LatinSquare> square;      // present when k == 3

  friend bool operator==(const NetStructure& a, const NetStructure& b) { return a.classes == b.classes; }
};

/// Checks the mixed-point condition for a candidate partition.
bool verify_net(const Lattice& lat, const std::vector<std::vector<int>>& classes);

/// Builds the full structure; throws std::invalid_argument when the
/// partition is not a net.
NetStructure make_net(const Lattice& lat, std::vector<std::vector<int>> classes);

/// Every net with k classes, each partition once, sorted by class lists.
/// Throws std::invalid_argument when k < 3 or k does not divide d.
std::vector<NetStructure> find_nets(const Lattice& lat, int k);
std::vector<NetStructure> find_nets(const Arrangement& a, int k);

/// Entry (r, c) is 1 + the position within class 3 of the line through
/// line r of class 1 and line c of class 2.
LatinSquare latin_square(const Lattice& lat, const NetStructure& n);

enum class ClassType { WithTriplePoint, DoublePointsOnly };

struct ClassCensus {
  std::vector<int> lines;
  Census census;  // flats of the class viewed as an arrangement by itself
  std::optional<ClassType> type;  // set when q == 4 and multiplicities <= 3
};

std::vector<ClassCensus> mixed_census(const Lattice& lat, const NetStructure& n);

}  // namespace linearr
