#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linearr {

enum class FieldKind { Rational, Eisenstein };

std::string_view field_name(FieldKind kind);
FieldKind parse_field_name(std::string_view text);

/// Raised for malformed literals, files and other bad input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact element u + v*w of Q(w), where w^2 + w + 1 = 0.
///
/// Rational scalars are those with v == 0. Both components are kept in
/// lowest terms with positive denominators, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class om = 0);

  static Scalar omega() { return Scalar(0, 1); }
  static Scalar rational(long num, long den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& om() const { return om_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(om_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(om_) == 0; }
  bool is_rational() const { return sgn(om_) == 0; }

  /// Field norm u^2 - uv + v^2; zero only for zero.
  mpq_class norm() const;
  /// Image under w -> w^2.
  Scalar conjugate() const;
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -om_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.om_ == b.om_;
  }
  /// Lexicographic on (u, v); a total order used for canonical sorting only.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Literal form accepted by parse_scalar: "3", "-1/2", "1/2+2/3*w", "-1*w".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class om_{0};
};

/// Parse a scalar literal. Grammar, with an optional leading sign:
///   INT | INT "/" POSINT | <rat> ("+"|"-") <rat> "*w" | <rat> "*w"
/// "w" is only accepted under FieldKind::Eisenstein.
Scalar parse_scalar(std::string_view text, FieldKind field);

}  // namespace linearr
