#include "linearr/scalar.hpp"

#include <cctype>

namespace linearr {

std::string_view field_name(FieldKind kind) {
  return kind == FieldKind::Rational ? "rational" : "eisenstein";
}

FieldKind parse_field_name(std::string_view text) {
  if (text == "rational") return FieldKind::Rational;
  if (text == "eisenstein") return FieldKind::Eisenstein;
  throw DataError("unknown field '" + std::string(text) + "'");
}

Scalar::Scalar(mpq_class re, mpq_class om) : re_(std::move(re)), om_(std::move(om)) {
  re_.canonicalize();
  om_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

mpq_class Scalar::norm() const {
  mpq_class n = re_ * re_ - re_ * om_ + om_ * om_;
  return n;
}

Scalar Scalar::conjugate() const {
  // w^2 = -1 - w, so u + v w^2 = (u - v) - v w.
  return Scalar(mpq_class(re_ - om_), mpq_class(-om_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  const mpq_class n = norm();
  Scalar c = conjugate();
  return Scalar(mpq_class(c.re_ / n), mpq_class(c.om_ / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  om_ += o.om_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  om_ -= o.om_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
  if (is_rational() && o.is_rational()) {
    re_ *= o.re_;
    return *this;
  }
  const mpq_class bd = om_ * o.om_;
  mpq_class re = re_ * o.re_ - bd;
  mpq_class om = re_ * o.om_ + om_ * o.re_ - bd;
  re_ = std::move(re);
  om_ = std::move(om);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_rational()) {
    re_ /= o.re_;
    om_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.om_, b.om_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (is_rational()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    out += sgn(om_) < 0 ? "-" : "+";
    out += mpq_class(abs(om_)).get_str();
  } else {
    out = om_.get_str();
  }
  out += "*w";
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("malformed scalar '" + std::string(text) + "' at column " +
                    std::to_string(pos + 1) + ": " + what);
  }

  std::string digits() {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  }

  // Unsigned rational: INT or INT "/" POSINT.
  mpq_class rational() {
    mpz_class num(digits());
    mpz_class den(1);
    if (peek() == '/') {
      ++pos;
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  bool omega_suffix() {
    if (text.substr(pos, 2) == "*w") {
      pos += 2;
      return true;
    }
    return false;
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, FieldKind field) {
  Cursor cur{text};
  if (text.empty()) cur.fail("empty literal");
  int sign = 1;
  if (cur.peek() == '+' || cur.peek() == '-') {
    sign = cur.peek() == '-' ? -1 : 1;
    ++cur.pos;
  }
  mpq_class first = cur.rational();
  if (sign < 0) first = -first;

  Scalar result;
  if (cur.done()) {
    result = Scalar(first);
  } else if (cur.omega_suffix()) {
    result = Scalar(0, first);
  } else if (cur.peek() == '+' || cur.peek() == '-') {
    const int sign2 = cur.peek() == '-' ? -1 : 1;
    ++cur.pos;
    mpq_class second = cur.rational();
    if (sign2 < 0) second = -second;
    if (!cur.omega_suffix()) cur.fail("expected '*w'");
    result = Scalar(first, second);
  } else {
    cur.fail("unexpected character");
  }
  if (!cur.done()) cur.fail("trailing characters");
  if (!result.is_rational() && field == FieldKind::Rational)
    throw DataError("scalar '" + std::string(text) + "' uses w under field rational");
  return result;
}

}  // namespace linearr
