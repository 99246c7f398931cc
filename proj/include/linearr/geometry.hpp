#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "linearr/scalar.hpp"

namespace linearr {

using Triple = std::array<Scalar, 3>;

Scalar dot(const Triple& a, const Triple& b);
Triple cross(const Triple& a, const Triple& b);

/// Scale so the first nonzero coordinate is 1. Throws on the zero triple.
Triple normalize(const Triple& t);

/// Line a*x + b*y + c*z = 0, stored normalized.
class Line {
 public:
  explicit Line(const Triple& coeffs) : c_(normalize(coeffs)) {}
  Line(Scalar a, Scalar b, Scalar c) : Line(Triple{std::move(a), std::move(b), std::move(c)}) {}

  const Triple& coeffs() const { return c_; }
  bool is_rational() const;

  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line& a, const Line& b) { return a.c_ <=> b.c_; }

  std::string to_string() const;

 private:
  Triple c_;
};

/// Projective point [x:y:z], stored normalized.
class Point {
 public:
  explicit Point(const Triple& coords) : c_(normalize(coords)) {}
  Point(Scalar x, Scalar y, Scalar z) : Point(Triple{std::move(x), std::move(y), std::move(z)}) {}

  const Triple& coords() const { return c_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.c_ <=> b.c_; }

  std::string to_string() const;

 private:
  Triple c_;
};

inline bool incident(const Point& p, const Line& l) { return dot(p.coords(), l.coeffs()).is_zero(); }

/// The unique common point of two distinct lines.
Point intersect(const Line& l1, const Line& l2);

/// Row-major 3x3 matrix over Q(w).
struct Matrix3 {
  std::array<Triple, 3> rows;

  static Matrix3 identity();
  Scalar det() const;
  Matrix3 transpose() const;
  /// Throws std::domain_error when singular.
  Matrix3 inverse() const;
  Triple apply(const Triple& v) const;
  bool is_rational() const;
};

class Arrangement {
 public:
  /// Validates: at least one line, pairwise distinct lines, and no w
  /// coefficients under FieldKind::Rational.
  Arrangement(std::string name, FieldKind field, std::vector<Line> lines);

  const std::string& name() const { return name_; }
  FieldKind field() const { return field_; }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(int i) const { return lines_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(lines_.size()); }

  /// Same lines in the same order (names may differ).
  bool same_lines(const Arrangement& other) const {
    return field_ == other.field_ && lines_ == other.lines_;
  }

 private:
  std::string name_;
  FieldKind field_;
  std::vector<Line> lines_;
};

/// Push the arrangement forward by the point map p -> m p; lines transform by
/// the inverse transpose. Throws std::domain_error for singular m.
Arrangement apply_projectivity(const Arrangement& a, const Matrix3& m);

/// New arrangement whose line i is a.line(perm[i]).
Arrangement permute_lines(const Arrangement& a, std::span<const int> perm);

}  // namespace linearr
