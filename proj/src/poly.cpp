#include "linearr/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace linearr {

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void accumulate_term(MultiPoly::Terms& terms, const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

MultiPoly::MultiPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Scalar(1));
  return p;
}

int MultiPoly::index_of(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  return it != vars_.end() && *it == var ? static_cast<int>(it - vars_.begin()) : -1;
}

MultiPoly MultiPoly::widened(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> slot;
  for (const auto& v : vars_)
    slot.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
  MultiPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents w(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) w[slot[i]] = e[i];
    out.terms_.emplace(std::move(w), c);
  }
  return out;
}

void MultiPoly::trim() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  Terms terms;
  for (const auto& [e, c] : terms_) {
    Exponents w;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) w.push_back(e[i]);
    terms.emplace(std::move(w), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first ==
                                                      Exponents(terms_.begin()->first.size(), 0));
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree(const std::string& var) const {
  if (terms_.empty()) return -1;
  const int i = index_of(var);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

MultiPoly MultiPoly::coefficient(const std::string& var, int k) const {
  const int i = index_of(var);
  if (i < 0) return k == 0 ? *this : MultiPoly();
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(i)] != k) continue;
    Exponents w = e;
    w[static_cast<std::size_t>(i)] = 0;
    out.terms_.emplace(std::move(w), c);
  }
  out.trim();
  return out;
}

const Scalar& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  const Scalar inv = leading_coefficient().inverse();
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= inv;
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  const int i = index_of(var);
  if (i < 0) return *this;
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(i)];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    MultiPoly mono;
    mono.vars_ = vars_;
    Exponents w = e;
    w[static_cast<std::size_t>(i)] = 0;
    mono.terms_.emplace(std::move(w), c);
    out += mono * powers[static_cast<std::size_t>(k)];
  }
  out.trim();
  return out;
}

Scalar MultiPoly::evaluate(const std::map<std::string, Scalar>& point) const {
  std::vector<Scalar> values;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("no value for variable " + v);
    values.push_back(it->second);
  }
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::substitute_fraction(const std::string& var, const MultiPoly& num, const MultiPoly& den) const {
  const int deg = degree(var);
  MultiPoly out;
  for (int j = 0; j <= deg; ++j) out += coefficient(var, j) * num.pow(j) * den.pow(deg - j);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  const auto vars = merged(vars_, o.vars_);
  if (vars != vars_) *this = widened(vars);
  const MultiPoly other = o.widened(vars);
  for (const auto& [e, c] : other.terms_) accumulate_term(terms_, e, c);
  trim();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  const auto vars = merged(vars_, o.vars_);
  const MultiPoly a = widened(vars);
  const MultiPoly b = o.widened(vars);
  Terms terms;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate_term(terms, e, ca * cb);
    }
  }
  vars_ = vars;
  terms_ = std::move(terms);
  trim();
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly x = a;
  MultiPoly y = b;
  x.trim();
  y.trim();
  return x.vars_ == y.vars_ && x.terms_ == y.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.re()) < 0;
      const mpq_class mag = abs(c.re());
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += '*';
    out += mono;
    first = false;
  }
  return out;
}

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly rest = p;
  MultiPoly quotient;
  const auto vars = merged(p.variables(), divisor.variables());
  while (!rest.is_zero()) {
    // Leading terms compared in the common variable universe.
    const MultiPoly r = rest.widened(vars);
    const MultiPoly g = divisor.widened(vars);
    const auto& [er, cr] = *r.terms().begin();
    const auto& [eg, cg] = *g.terms().begin();
    MultiPoly term;
    term.vars_ = vars;
    Exponents e(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      e[i] = er[i] - eg[i];
      if (e[i] < 0) return std::nullopt;
    }
    term.terms_.emplace(std::move(e), cr / cg);
    term.trim();
    quotient += term;
    rest -= term * divisor;
  }
  return quotient;
}

MultiPoly divide(const MultiPoly& p, const MultiPoly& divisor) {
  auto q = try_divide(p, divisor);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *std::move(q);
}

namespace {

using Matrix = std::vector<std::vector<MultiPoly>>;

MultiPoly minor(const Matrix& m, std::size_t row, unsigned mask, std::unordered_map<unsigned, MultiPoly>& memo) {
  if (row == m.size()) return MultiPoly(1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  MultiPoly total;
  int position = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (mask & (1u << c)) continue;
    if (!m[row][c].is_zero()) {
      MultiPoly t = m[row][c] * minor(m, row + 1, mask | (1u << c), memo);
      if (position % 2) total -= t;
      else total += t;
    }
    ++position;
  }
  memo.emplace(mask, total);
  return total;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  const int m = p.degree(var);
  const int n = q.degree(var);
  if (m <= 0 || n <= 0) throw std::invalid_argument("resultant needs positive degree in " + var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size > 30) throw std::invalid_argument("Sylvester matrix too large");
  Matrix s(size, std::vector<MultiPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = p.coefficient(var, m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = q.coefficient(var, n - j);
  std::unordered_map<unsigned, MultiPoly> memo;
  return minor(s, 0, 0u, memo);
}

}  // namespace linearr
