#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linearr/scalar.hpp"

namespace linearr {

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first; earlier variables dominate.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over Q(w) in named variables. Variables are kept sorted
/// by name and the universe widens automatically when polynomials combine.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Scalar, GradedLexDescending>;

  MultiPoly() = default;
  MultiPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const;
  int degree(const std::string& var) const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient(const std::string& var, int k) const;

  /// Leading term in graded lex order; throws on zero.
  const Scalar& leading_coefficient() const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;

  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  Scalar evaluate(const std::map<std::string, Scalar>& point) const;
  /// den^deg_var(p) * p(var = num / den): the numerator after clearing.
  MultiPoly substitute_fraction(const std::string& var, const MultiPoly& num, const MultiPoly& den) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly pow(int e) const;

  /// Equal as polynomials (variables with zero exponent everywhere ignored).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Readable form such as "x^3 - y^3" or "(1+2*w)*x*y".
  std::string to_string() const;

  friend std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& divisor);

 private:
  MultiPoly widened(const std::vector<std::string>& vars) const;
  void trim();
  int index_of(const std::string& var) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Quotient when `divisor` divides `p` exactly, nullopt otherwise.
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& divisor);
/// Throws std::domain_error when the division is not exact.
MultiPoly divide(const MultiPoly& p, const MultiPoly& divisor);

/// Sylvester resultant in `var`. Throws std::invalid_argument if either
/// input has degree 0 in var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

}  // namespace linearr
