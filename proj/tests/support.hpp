#pragma once

// Generators and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's lattice and elimination code.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "linearr/geometry.hpp"

namespace testing_support {

using namespace linearr;

inline Scalar random_scalar(std::mt19937& rng, bool eisenstein, int range = 5) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 3);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  mpq_class om(0);
  if (eisenstein) {
    om = mpq_class(num(rng), den(rng));
    om.canonicalize();
  }
  return Scalar(re, om);
}

inline Matrix3 random_invertible(std::mt19937& rng, bool eisenstein = false) {
  for (;;) {
    Matrix3 m;
    for (auto& row : m.rows)
      for (auto& s : row) s = random_scalar(rng, eisenstein, 3);
    if (!m.det().is_zero()) return m;
  }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Line random_line(std::mt19937& rng, int range = 4) {
  std::uniform_int_distribution<long> c(-range, range);
  for (;;) {
    const long a = c(rng), b = c(rng), d = c(rng);
    if (a || b || d) return Line(a, b, d);
  }
}

/// Random arrangement of n distinct rational lines with small coefficients;
/// small ranges make multiple points common.
inline Arrangement random_arrangement(std::mt19937& rng, int n, int range = 2) {
  std::vector<Line> lines;
  while (static_cast<int>(lines.size()) < n) {
    Line l = random_line(rng, range);
    if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
  }
  return Arrangement("random", FieldKind::Rational, std::move(lines));
}

/// Lines through the intersection point of lines i and j, straight from
/// coordinates.
inline std::vector<int> lines_through(const Arrangement& a, int i, int j) {
  const Triple p = cross(a.line(i).coeffs(), a.line(j).coeffs());
  std::vector<int> out;
  for (int k = 0; k < a.size(); ++k)
    if (dot(p, a.line(k).coeffs()).is_zero()) out.push_back(k);
  return out;
}

/// Multiple points as sorted line sets, straight from coordinates.
inline std::vector<std::vector<int>> brute_points(const Arrangement& a) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      auto s = lines_through(a, i, j);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of weight vectors in F_p^d satisfying the flat equations,
/// by exhaustive enumeration.
inline long brute_solution_count(const Arrangement& a, int p) {
  const auto points = brute_points(a);
  const int d = a.size();
  std::vector<int> w(static_cast<std::size_t>(d), 0);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& pt : points) {
      const int m = static_cast<int>(pt.size());
      if (m % p == 0) {
        long s = 0;
        for (int l : pt) s += w[static_cast<std::size_t>(l)];
        ok = s % p == 0;
      } else {
        for (int l : pt) ok = ok && w[static_cast<std::size_t>(l)] == w[static_cast<std::size_t>(pt.front())];
      }
      if (!ok) break;
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < d && ++w[static_cast<std::size_t>(pos)] == p) w[static_cast<std::size_t>(pos++)] = 0;
    if (pos == d) break;
  }
  return count;
}

/// Counts partitions of all lines into k classes of equal size forming a
/// net, enumerating every labelled assignment and dividing by k!.
inline long brute_net_count(const Arrangement& a, int k) {
  const int d = a.size();
  const int q = d / k;
  std::vector<std::vector<std::vector<int>>> through(static_cast<std::size_t>(d),
                                                     std::vector<std::vector<int>>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) through[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lines_through(a, i, j);
  std::vector<int> owner(static_cast<std::size_t>(d), 0);
  long labelled = 0;
  for (;;) {
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int o : owner) ++size[static_cast<std::size_t>(o)];
    bool ok = std::all_of(size.begin(), size.end(), [&](int s) { return s == q; });
    for (int i = 0; i < d && ok; ++i)
      for (int j = i + 1; j < d && ok; ++j) {
        if (owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)]) continue;
        std::vector<int> hits(static_cast<std::size_t>(k), 0);
        for (int l : through[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ++hits[static_cast<std::size_t>(owner[static_cast<std::size_t>(l)])];
        ok = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      }
    if (ok) ++labelled;
    int pos = 0;
    while (pos < d && ++owner[static_cast<std::size_t>(pos)] == k) owner[static_cast<std::size_t>(pos++)] = 0;
    if (pos == d) break;
  }
  long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return labelled / fact;
}

}  // namespace testing_support
