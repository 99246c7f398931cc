#pragma once

#include <optional>
#include <vector>

#include "linearr/lattice.hpp"

namespace linearr {

bool is_prime(int n);

enum class EquationKind { Sum, Equality };

/// One row over F_p. `flat` indexes Lattice::flats().
struct Equation {
  int flat;
  EquationKind kind;
  std::vector<int> coeffs;  // one entry per line, in [0, p)
};

/// Weights on lines: for each flat whose multiplicity p divides, the weights
/// of its lines sum to zero; otherwise they are all equal.
struct ModularSystem {
  int p;
  int variables;
  std::vector<Equation> equations;

  bool satisfied_by(const std::vector<int>& weights) const;
};

/// Throws std::invalid_argument when p is not prime.
ModularSystem build_system(const Arrangement& a, int p);
ModularSystem build_system(const Lattice& lat, int p);

struct BettiResult {
  int p;
  int beta;
  /// Reduced row echelon basis of the solution space (pivot = first nonzero).
  std::vector<std::vector<int>> echelon;

  /// Solution basis with the all-ones vector first.
  std::vector<std::vector<int>> basis() const;
};

/// Solution space of the system by Gaussian elimination over F_p.
std::vector<std::vector<int>> solution_space(const ModularSystem& s);

BettiResult beta_1p(const Arrangement& a, int p);
BettiResult beta_1p(const Lattice& lat, int p);

/// A solution not proportional to all-ones, present iff beta >= 1.
std::optional<std::vector<int>> nonconstant_solution(const BettiResult& r);

}  // namespace linearr
