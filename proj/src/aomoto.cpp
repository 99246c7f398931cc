#include "linearr/aomoto.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace linearr {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; static_cast<long>(k) * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

namespace {

int inverse_mod(int a, int p) {
  // Extended Euclid; a is nonzero mod p.
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return static_cast<int>((t % p + p) % p);
}

// In-place reduced row echelon form; pivots on the lowest column first.
// Zero rows are dropped. Returns pivot columns.
std::vector<int> rref(std::vector<std::vector<int>>& m, int cols, int p) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][static_cast<std::size_t>(c)] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const long inv = inverse_mod(m[row][static_cast<std::size_t>(c)], p);
    for (int& x : m[row]) x = static_cast<int>(x * inv % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      const long f = m[r][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < m[r].size(); ++j)
        m[r][j] = static_cast<int>(((m[r][j] - f * m[row][j]) % p + p) % p);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

bool ModularSystem::satisfied_by(const std::vector<int>& weights) const {
  for (const Equation& e : equations) {
    long acc = 0;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) acc += static_cast<long>(e.coeffs[i]) * weights[i];
    if (acc % p != 0) return false;
  }
  return true;
}

ModularSystem build_system(const Lattice& lat, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  const int d = lat.line_count();
  ModularSystem s{p, d, {}};
  for (int f = 0; f < static_cast<int>(lat.flats().size()); ++f) {
    const Flat& flat = lat.flats()[static_cast<std::size_t>(f)];
    if (flat.multiplicity() % p == 0) {
      std::vector<int> row(static_cast<std::size_t>(d), 0);
      for (int l : flat.lines) row[static_cast<std::size_t>(l)] = 1;
      s.equations.push_back({f, EquationKind::Sum, std::move(row)});
    } else {
      for (std::size_t i = 1; i < flat.lines.size(); ++i) {
        std::vector<int> row(static_cast<std::size_t>(d), 0);
        row[static_cast<std::size_t>(flat.lines[i - 1])] = 1;
        row[static_cast<std::size_t>(flat.lines[i])] = p - 1;
        s.equations.push_back({f, EquationKind::Equality, std::move(row)});
      }
    }
  }
  return s;
}

ModularSystem build_system(const Arrangement& a, int p) { return build_system(Lattice(a), p); }

std::vector<std::vector<int>> solution_space(const ModularSystem& s) {
  const int d = s.variables;
  std::vector<std::vector<int>> m;
  m.reserve(s.equations.size());
  for (const Equation& e : s.equations) m.push_back(e.coeffs);
  const std::vector<int> pivots = rref(m, d, s.p);

  std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<int>> kernel;
  for (int f = 0; f < d; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = (s.p - m[r][static_cast<std::size_t>(f)]) % s.p;
    kernel.push_back(std::move(v));
  }
  rref(kernel, d, s.p);
  return kernel;
}

BettiResult beta_1p(const Lattice& lat, int p) {
  BettiResult r{p, 0, solution_space(build_system(lat, p))};
  r.beta = static_cast<int>(r.echelon.size()) - 1;
  return r;
}

BettiResult beta_1p(const Arrangement& a, int p) { return beta_1p(Lattice(a), p); }

std::vector<std::vector<int>> BettiResult::basis() const {
  std::vector<std::vector<int>> out;
  if (echelon.empty()) return out;
  out.emplace_back(echelon.front().size(), 1);
  out.insert(out.end(), echelon.begin() + 1, echelon.end());
  return out;
}

std::optional<std::vector<int>> nonconstant_solution(const BettiResult& r) {
  if (r.beta < 1) return std::nullopt;
  for (const auto& v : r.echelon)
    if (std::any_of(v.begin(), v.end(), [&](int x) { return x != v.front(); })) return v;
  return std::nullopt;
}

}  // namespace linearr
