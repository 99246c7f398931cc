#pragma once

#include <map>
#include <string>
#include <vector>

#include "linearr/poly.hpp"

namespace linearr {

/// The polynomial expression must not vanish at an admissible point.
struct SideConstraint {
  std::string label;  // e.g. "b != 1"
  MultiPoly nonzero;
};

/// Four quartic-ish equations in a, b, c, d together with their inequations.
struct EliminationSystem {
  std::vector<std::string> names;  // "e1".."e4"
  std::vector<MultiPoly> equations;
  std::vector<SideConstraint> constraints;

  bool is_zero_at(const std::map<std::string, Scalar>& point) const;
  /// Labels of constraints violated at the point.
  std::vector<std::string> violated(const std::map<std::string, Scalar>& point) const;
};

EliminationSystem quadruple_point_system();

struct StrippedFactor {
  MultiPoly factor;
  int multiplicity;
  std::string excluded_by;
};

struct EliminationStep {
  std::string label;        // name of the produced polynomial
  std::string derivation;   // how it was obtained
  MultiPoly raw;            // before stripping excluded factors
  std::vector<StrippedFactor> stripped;
  MultiPoly result;
};

/// A zero of the equations (side constraints ignored) violating `constraint`
/// and lying on the vanishing locus of a stripped factor.
struct DegenerateZero {
  std::string constraint;
  std::map<std::string, Scalar> point;
  std::string factor;
};

struct EliminationCertificate {
  EliminationSystem system;
  std::string solved_variable;
  MultiPoly numerator;
  MultiPoly denominator;
  bool substitution_checks = false;  // first equation vanishes identically
  std::vector<EliminationStep> steps;
  MultiPoly final_eliminant;          // after stripping
  bool no_admissible_solution = false;
  std::vector<DegenerateZero> degenerate;

  std::string conclusion() const {
    return no_admissible_solution ? "no admissible solution" : "elimination inconclusive";
  }
  std::string to_string() const;
};

/// Solve e1 for a, substitute, strip excluded factors, eliminate c then b by
/// resultants, and collect degenerate zeros for each side constraint.
EliminationCertificate verify_lemma14();

/// Divides out every factor from the candidate list, with multiplicity.
MultiPoly strip_factors(const MultiPoly& p, const std::vector<SideConstraint>& candidates,
                        std::vector<StrippedFactor>& stripped);

}  // namespace linearr
