#include "linearr/monodromy.hpp"

#include <algorithm>
#include <stdexcept>

namespace linearr {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

int euler_totient(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// p when m = p^s with s >= 1, else 0.
int prime_power_base(int m) {
  for (int p = 2; p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
  }
  return 0;
}

}  // namespace

std::vector<int> admissible_orders(const Lattice& lat) {
  const int d = lat.line_count();
  const int top = lat.max_multiplicity();
  std::vector<int> out;
  for (int m = 2; m <= d; ++m) {
    if (d % m) continue;
    if (top <= 5 && m > 4) continue;
    const bool hit = std::any_of(lat.flats().begin(), lat.flats().end(), [&](const Flat& f) {
      return f.multiplicity() >= 3 && f.multiplicity() % m == 0;
    });
    if (hit) out.push_back(m);
  }
  return out;
}

std::vector<int> admissible_orders(const Arrangement& a) { return admissible_orders(Lattice(a)); }

std::vector<NetStructure> small_nets(const Lattice& lat) {
  const int d = lat.line_count();
  std::vector<NetStructure> out;
  if (d % 3 == 0 && d / 3 >= 2 && d / 3 <= 4) {
    auto n = find_nets(lat, 3);
    out.insert(out.end(), n.begin(), n.end());
  }
  if (d == 12) {
    auto n = find_nets(lat, 4);
    out.insert(out.end(), n.begin(), n.end());
  }
  return out;
}

MonodromyReport monodromy_verdict(const Arrangement& a) {
  if (!is_essential(a)) throw std::invalid_argument("monodromy needs an essential arrangement");
  const Lattice lat(a);
  MonodromyReport r;
  r.d = a.size();
  r.max_mult = lat.max_multiplicity();
  r.admissible = admissible_orders(lat);

  for (int m : r.admissible) {
    OrderBound b{m, euler_totient(m), prime_power_base(m), 0, std::nullopt};
    if (b.prime) {
      auto it = r.betti.find(b.prime);
      if (it == r.betti.end()) it = r.betti.emplace(b.prime, beta_1p(lat, b.prime).beta).first;
      b.upper = it->second;
    }
    r.bounds.push_back(b);
  }

  const bool in_scope = r.d <= 14 && r.max_mult <= 5;
  if (in_scope) r.nets = small_nets(lat);

  const bool all_bounded_zero = std::all_of(r.bounds.begin(), r.bounds.end(),
                                            [](const OrderBound& b) { return b.upper && *b.upper == 0; });
  if (is_prime(r.d)) {
    r.verdict = Verdict::Trivial;
    r.reason = "d is prime";
  } else if (r.admissible.empty()) {
    r.verdict = Verdict::Trivial;
    r.reason = "no admissible order";
  } else if (all_bounded_zero) {
    r.verdict = Verdict::Trivial;
    r.reason = "every admissible order is a prime power with beta bound 0";
  } else if (in_scope) {
    r.verdict = r.nets.empty() ? Verdict::Trivial : Verdict::Nontrivial;
    r.reason = r.nets.empty() ? "d <= 14, multiplicities <= 5 and no reduced net"
                              : "reduced net under d <= 14, multiplicities <= 5";
  } else {
    r.verdict = Verdict::Undetermined;
    r.reason = r.max_mult > 5 ? "a point of multiplicity > 5" : "more than 14 lines";
  }

  const bool three_net = std::any_of(r.nets.begin(), r.nets.end(), [](const NetStructure& n) { return n.k == 3; });
  for (OrderBound& b : r.bounds) {
    if (r.verdict == Verdict::Trivial) {
      b.lower = 0;
      b.upper = 0;
    } else if (b.m == 3 && three_net) {
      b.lower = std::max(b.lower, 1);
    }
  }

  r.h1_lower = r.d - 1;
  int upper = r.d - 1;
  bool upper_known = true;
  for (const OrderBound& b : r.bounds) {
    r.h1_lower += b.lower * b.totient;
    if (b.upper) upper += *b.upper * b.totient;
    else upper_known = false;
  }
  if (r.verdict == Verdict::Nontrivial &&
      std::all_of(r.bounds.begin(), r.bounds.end(), [](const OrderBound& b) { return b.lower == 0; })) {
    // Some eigenvalue other than 1 occurs; the cheapest admissible one.
    int cheapest = 0;
    for (const OrderBound& b : r.bounds)
      if (!b.upper || *b.upper > 0) cheapest = cheapest == 0 ? b.totient : std::min(cheapest, b.totient);
    r.h1_lower += cheapest;
  }
  if (upper_known) r.h1_upper = upper;
  return r;
}

TheoremCheck crosscheck_theorem(const Arrangement& a) {
  const Lattice lat(a);
  if (a.size() > 14 || lat.max_multiplicity() > 5 || !is_essential(a))
    throw std::invalid_argument("cross-check needs an essential arrangement with d <= 14 and multiplicities <= 5");
  TheoremCheck t;
  t.beta2 = beta_1p(lat, 2).beta;
  t.beta3 = beta_1p(lat, 3).beta;
  const auto nets = small_nets(lat);
  t.net_found = !nets.empty();
  t.three_net_found = std::any_of(nets.begin(), nets.end(), [](const NetStructure& n) { return n.k == 3; });
  t.forward = !(t.beta2 > 0 || t.beta3 > 0) || t.net_found;
  t.converse = !t.three_net_found || t.beta3 >= 1;
  return t;
}

}  // namespace linearr
