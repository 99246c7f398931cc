#include "linearr/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace linearr {

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

std::string point_string(const std::map<std::string, Scalar>& point) {
  std::string names;
  std::string values;
  for (const auto& [k, v] : point) {
    if (!names.empty()) {
      names += ',';
      values += ", ";
    }
    names += k;
    values += v.to_string();
  }
  return "(" + names + ") = (" + values + ")";
}

}  // namespace

bool EliminationSystem::is_zero_at(const std::map<std::string, Scalar>& point) const {
  return std::all_of(equations.begin(), equations.end(),
                     [&](const MultiPoly& e) { return e.evaluate(point).is_zero(); });
}

std::vector<std::string> EliminationSystem::violated(const std::map<std::string, Scalar>& point) const {
  std::vector<std::string> out;
  for (const SideConstraint& s : constraints)
    if (s.nonzero.evaluate(point).is_zero()) out.push_back(s.label);
  return out;
}

EliminationSystem quadruple_point_system() {
  const MultiPoly a = var("a"), b = var("b"), c = var("c"), d = var("d");
  EliminationSystem s;
  s.names = {"e1", "e2", "e3", "e4"};
  s.equations = {
      a * b - b * d * c + d * c - d,
      (a * b * c - c * d) * (MultiPoly(1) - b) - b * c + d,
      a * d - a * b * d + b * c - d,
      a * b * d - a * d - a * b * b * c - a * b + d + a * b * c,
  };
  s.constraints = {
      {"a != 0", a},     {"c != 0", c},     {"d != 0", d},
      {"b != 0", b},     {"b != 1", b - 1}, {"a != c", a - c},
      {"d != 1", d - 1}, {"d != a", d - a}, {"d != c", d - c},
  };
  return s;
}

MultiPoly strip_factors(const MultiPoly& p, const std::vector<SideConstraint>& candidates,
                        std::vector<StrippedFactor>& stripped) {
  MultiPoly rest = p;
  if (rest.is_zero()) return rest;
  for (const SideConstraint& s : candidates) {
    int mult = 0;
    while (!rest.is_constant()) {
      auto q = try_divide(rest, s.nonzero);
      if (!q) break;
      rest = *std::move(q);
      ++mult;
    }
    if (mult > 0) stripped.push_back({s.nonzero, mult, s.label});
  }
  return rest;
}

EliminationCertificate verify_lemma14() {
  EliminationCertificate cert;
  cert.system = quadruple_point_system();
  const EliminationSystem& sys = cert.system;
  cert.solved_variable = "a";

  // Factors excluded by the inequations that do not involve the solved variable.
  std::vector<SideConstraint> strippable;
  for (const SideConstraint& s : sys.constraints)
    if (s.nonzero.degree("a") == 0 && s.nonzero.total_degree() == 1) strippable.push_back(s);

  const MultiPoly& first = sys.equations.front();
  if (first.degree("a") != 1) throw std::logic_error("first equation is not linear in a");
  cert.denominator = first.coefficient("a", 1);
  cert.numerator = -first.coefficient("a", 0);
  cert.substitution_checks = first.substitute_fraction("a", cert.numerator, cert.denominator).is_zero();

  std::vector<std::string> labels;
  std::vector<MultiPoly> current;
  for (std::size_t i = 1; i < sys.equations.size(); ++i) {
    EliminationStep step;
    step.label = "g" + std::to_string(i + 1);
    step.derivation = sys.names[i] + " with a = (" + cert.numerator.to_string() + ")/(" +
                      cert.denominator.to_string() + "), times the cleared denominator";
    step.raw = sys.equations[i].substitute_fraction("a", cert.numerator, cert.denominator);
    step.result = strip_factors(step.raw, strippable, step.stripped);
    labels.push_back(step.label);
    current.push_back(step.result);
    cert.steps.push_back(std::move(step));
  }

  // Resultants against the first polynomial, variable by variable.
  int round = 0;
  for (const char* v : {"c", "b"}) {
    ++round;
    std::vector<std::string> next_labels;
    std::vector<MultiPoly> next;
    const MultiPoly pivot = current.front();
    for (std::size_t i = 1; i < current.size(); ++i) {
      EliminationStep step;
      step.label = "r" + std::to_string(round) + std::to_string(i);
      if (pivot.degree(v) > 0 && current[i].degree(v) > 0) {
        step.derivation = std::string("res_") + v + "(" + labels.front() + ", " + labels[i] + ")";
        step.raw = resultant(pivot, current[i], v);
      } else {
        step.derivation = labels[i] + " (free of " + v + ")";
        step.raw = current[i];
      }
      step.result = strip_factors(step.raw, strippable, step.stripped);
      next_labels.push_back(step.label);
      next.push_back(step.result);
      cert.steps.push_back(std::move(step));
    }
    labels = std::move(next_labels);
    current = std::move(next);
    if (current.empty()) break;
  }

  if (!current.empty()) {
    cert.final_eliminant = current.front();
    cert.no_admissible_solution = cert.substitution_checks && !cert.final_eliminant.is_zero() &&
                                  cert.final_eliminant.is_constant();
  }

  // Degenerate zeros: each inequation dropped in turn.
  std::vector<const SideConstraint*> factors;
  for (const EliminationStep& step : cert.steps)
    for (const StrippedFactor& f : step.stripped)
      for (const SideConstraint& s : strippable)
        if (s.label == f.excluded_by &&
            std::find(factors.begin(), factors.end(), &s) == factors.end())
          factors.push_back(&s);
  std::vector<std::map<std::string, Scalar>> zeros;
  constexpr int kRange = 2;
  for (int a = -kRange; a <= kRange; ++a)
    for (int b = -kRange; b <= kRange; ++b)
      for (int c = -kRange; c <= kRange; ++c)
        for (int d = -kRange; d <= kRange; ++d) {
          std::map<std::string, Scalar> pt{{"a", a}, {"b", b}, {"c", c}, {"d", d}};
          if (sys.is_zero_at(pt)) zeros.push_back(std::move(pt));
        }
  for (const SideConstraint& s : sys.constraints) {
    for (const auto& pt : zeros) {
      if (!s.nonzero.evaluate(pt).is_zero()) continue;
      auto on = std::find_if(factors.begin(), factors.end(),
                             [&](const SideConstraint* f) { return f->nonzero.evaluate(pt).is_zero(); });
      if (on == factors.end()) continue;
      cert.degenerate.push_back({s.label, pt, (*on)->nonzero.to_string()});
      break;
    }
  }
  return cert;
}

std::string EliminationCertificate::to_string() const {
  std::string out = "system\n";
  for (std::size_t i = 0; i < system.equations.size(); ++i)
    out += "  " + system.names[i] + " = " + system.equations[i].to_string() + "\n";
  out += "side constraints:";
  for (const SideConstraint& s : system.constraints) out += " [" + s.label + "]";
  out += "\n\nsolve " + system.names.front() + " for " + solved_variable + ": " + solved_variable + " = (" +
         numerator.to_string() + ")/(" + denominator.to_string() + ")\n";
  out += "  back-substitution into " + system.names.front() + ": " +
         (substitution_checks ? "identically 0" : "NONZERO") + "\n";
  for (const EliminationStep& s : steps) {
    out += "\n" + s.label + " := " + s.derivation + "\n";
    out += "  raw      = " + s.raw.to_string() + "\n";
    for (const StrippedFactor& f : s.stripped)
      out += "  stripped (" + f.factor.to_string() + ")^" + std::to_string(f.multiplicity) + "  [" + f.excluded_by +
             "]\n";
    out += "  result   = " + s.result.to_string() + "\n";
  }
  out += "\nfinal eliminant: " + final_eliminant.to_string() + "\n";
  out += "conclusion: " + conclusion() + "\n";
  out += "\ndegenerate zeros with one side constraint dropped:\n";
  for (const DegenerateZero& z : degenerate)
    out += "  [" + z.constraint + "] " + point_string(z.point) + " on " + z.factor + " = 0\n";
  return out;
}

}  // namespace linearr
