#include "linearr/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linearr {

Scalar dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Triple normalize(const Triple& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i].is_zero()) continue;
    if (t[i].is_one()) return t;
    const Scalar inv = t[i].inverse();
    Triple out;
    for (std::size_t j = 0; j < 3; ++j) out[j] = j < i ? Scalar() : (j == i ? Scalar(1) : t[j] * inv);
    return out;
  }
  throw std::invalid_argument("zero projective triple");
}

namespace {

std::string triple_string(const Triple& t) {
  return t[0].to_string() + " " + t[1].to_string() + " " + t[2].to_string();
}

}  // namespace

bool Line::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

std::string Line::to_string() const { return triple_string(c_); }
std::string Point::to_string() const { return "[" + triple_string(c_) + "]"; }

Point intersect(const Line& l1, const Line& l2) {
  if (l1 == l2) throw std::invalid_argument("intersect: identical lines");
  return Point(cross(l1.coeffs(), l2.coeffs()));
}

Matrix3 Matrix3::identity() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) m.rows[i][i] = 1;
  return m;
}

Scalar Matrix3::det() const { return dot(rows[0], cross(rows[1], rows[2])); }

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.rows[i][j] = rows[j][i];
  return t;
}

Matrix3 Matrix3::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw std::domain_error("singular matrix");
  // Columns of the adjugate are cross products of row pairs.
  const Triple c0 = cross(rows[1], rows[2]);
  const Triple c1 = cross(rows[2], rows[0]);
  const Triple c2 = cross(rows[0], rows[1]);
  const Scalar inv = d.inverse();
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.rows[i][0] = c0[i] * inv;
    out.rows[i][1] = c1[i] * inv;
    out.rows[i][2] = c2[i] * inv;
  }
  return out;
}

Triple Matrix3::apply(const Triple& v) const {
  return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v)};
}

bool Matrix3::is_rational() const {
  for (const auto& r : rows)
    for (const auto& s : r)
      if (!s.is_rational()) return false;
  return true;
}

Arrangement::Arrangement(std::string name, FieldKind field, std::vector<Line> lines)
    : name_(std::move(name)), field_(field), lines_(std::move(lines)) {
  if (lines_.empty()) throw DataError("arrangement '" + name_ + "' has no lines");
  std::map<Line, int> seen;
  for (int i = 0; i < size(); ++i) {
    const Line& l = lines_[static_cast<std::size_t>(i)];
    if (field_ == FieldKind::Rational && !l.is_rational())
      throw DataError("line " + std::to_string(i + 1) + " of '" + name_ +
                      "' has w coefficients but the field is rational");
    auto [it, fresh] = seen.emplace(l, i);
    if (!fresh)
      throw DataError("duplicate line in '" + name_ + "': lines " + std::to_string(it->second + 1) +
                      " and " + std::to_string(i + 1) + " are equal");
  }
}

Arrangement apply_projectivity(const Arrangement& a, const Matrix3& m) {
  const Matrix3 lt = m.inverse().transpose();
  std::vector<Line> lines;
  lines.reserve(a.lines().size());
  for (const Line& l : a.lines()) lines.emplace_back(lt.apply(l.coeffs()));
  FieldKind field = a.field();
  if (!m.is_rational()) field = FieldKind::Eisenstein;
  return Arrangement(a.name() + "*proj", field, std::move(lines));
}

Arrangement permute_lines(const Arrangement& a, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != a.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Line> lines;
  lines.reserve(perm.size());
  for (int i : perm) lines.push_back(a.line(i));
  return Arrangement(a.name() + "*perm", a.field(), std::move(lines));
}

}  // namespace linearr
