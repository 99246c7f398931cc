#include "linearr/pencil.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace linearr {

MultiPoly linear_form(const Line& l) {
  const Triple& c = l.coeffs();
  return MultiPoly(c[0]) * MultiPoly::variable("x") + MultiPoly(c[1]) * MultiPoly::variable("y") +
         MultiPoly(c[2]) * MultiPoly::variable("z");
}

MultiPoly class_product(const Arrangement& a, const std::vector<int>& lines) {
  MultiPoly q(1);
  for (int i : lines) q *= linear_form(a.line(i));
  return q.monic();
}

namespace {

// Coefficient of every monomial, in the fixed variable order x, y, z.
std::map<Exponents, Scalar> coefficients_xyz(const MultiPoly& p) {
  static const std::vector<std::string> xyz{"x", "y", "z"};
  std::map<Exponents, Scalar> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents full(3, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto pos = std::find(xyz.begin(), xyz.end(), p.variables()[i]) - xyz.begin();
      full[static_cast<std::size_t>(pos)] = e[i];
    }
    out.emplace(std::move(full), c);
  }
  return out;
}

// Kernel of an n x 3 matrix over Q(w), by reduction to echelon form.
std::vector<std::array<Scalar, 3>> kernel3(std::vector<std::array<Scalar, 3>> rows) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < 3 && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(c)].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = rows[r][static_cast<std::size_t>(c)].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][static_cast<std::size_t>(c)].is_zero()) continue;
      const Scalar f = rows[o][static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < 3; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::array<Scalar, 3>> out;
  for (int f = 0; f < 3; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::array<Scalar, 3> v{};
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -rows[i][static_cast<std::size_t>(f)];
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<PencilRelation> pencil_check(const Arrangement& a, const std::vector<std::vector<int>>& classes) {
  if (classes.size() != 3) throw std::invalid_argument("pencil check needs exactly 3 classes");
  PencilRelation rel;
  std::array<std::map<Exponents, Scalar>, 3> coeffs;
  std::set<Exponents> monomials;
  for (std::size_t i = 0; i < 3; ++i) {
    rel.products[i] = class_product(a, classes[i]);
    coeffs[i] = coefficients_xyz(rel.products[i]);
    for (const auto& [e, c] : coeffs[i]) monomials.insert(e);
  }
  std::vector<std::array<Scalar, 3>> rows;
  for (const Exponents& e : monomials) {
    std::array<Scalar, 3> row{};
    for (std::size_t i = 0; i < 3; ++i)
      if (auto it = coeffs[i].find(e); it != coeffs[i].end()) row[i] = it->second;
    rows.push_back(row);
  }
  const auto kernel = kernel3(std::move(rows));
  if (kernel.size() != 1) return std::nullopt;
  const auto& v = kernel.front();
  if (v[0].is_zero() || v[1].is_zero() || v[2].is_zero()) return std::nullopt;
  const Scalar inv = v[0].inverse();
  for (std::size_t i = 0; i < 3; ++i) rel.lambda[i] = v[i] * inv;
  return rel;
}

std::optional<PencilRelation> pencil_check(const Arrangement& a, const NetStructure& n) {
  if (n.k != 3) throw std::invalid_argument("pencil check needs a net with 3 classes");
  return pencil_check(a, n.classes);
}

bool pencil_holds(const PencilRelation& r) {
  MultiPoly sum;
  for (std::size_t i = 0; i < 3; ++i) sum += MultiPoly(r.lambda[i]) * r.products[i];
  return sum.is_zero();
}

}  // namespace linearr
