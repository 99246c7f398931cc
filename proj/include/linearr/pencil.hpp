#pragma once

#include <array>
#include <optional>
#include <vector>

#include "linearr/geometry.hpp"
#include "linearr/nets.hpp"
#include "linearr/poly.hpp"

namespace linearr {

/// a*x + b*y + c*z in the variables x, y, z.
MultiPoly linear_form(const Line& l);

/// Product of the linear forms of the given lines, scaled to be monic.
MultiPoly class_product(const Arrangement& a, const std::vector<int>& lines);

struct PencilRelation {
  std::array<MultiPoly, 3> products;
  std::array<Scalar, 3> lambda;  // lambda[0] == 1
};

/// Nonzero scalars with l0*Q0 + l1*Q1 + l2*Q2 = 0, where Qi is the monic
/// product of class i; nullopt when no such relation exists.
std::optional<PencilRelation> pencil_check(const Arrangement& a, const std::vector<std::vector<int>>& classes);
std::optional<PencilRelation> pencil_check(const Arrangement& a, const NetStructure& n);

/// Re-expands the combination and tests it for zero.
bool pencil_holds(const PencilRelation& r);

}  // namespace linearr
