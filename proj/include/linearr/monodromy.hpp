#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linearr/aomoto.hpp"
#include "linearr/nets.hpp"

namespace linearr {

enum class Verdict { Trivial, Nontrivial, Undetermined };
std::string_view verdict_name(Verdict v);

/// Interval for the multiplicity of the m-th cyclotomic factor.
struct OrderBound {
  int m;
  int totient;
  int prime = 0;  // p when m is a power of p, else 0
  int lower = 0;
  std::optional<int> upper;  // unknown for orders that are not prime powers
};

struct MonodromyReport {
  int d = 0;
  int max_mult = 0;
  std::vector<int> admissible;
  std::map<int, int> betti;  // p -> beta_1p for the primes consulted
  std::vector<NetStructure> nets;
  Verdict verdict = Verdict::Undetermined;
  std::string reason;
  std::vector<OrderBound> bounds;
  int h1_lower = 0;
  std::optional<int> h1_upper;
};

int euler_totient(int m);

/// Orders m > 1 dividing d for which some point of multiplicity >= 3 has
/// multiplicity divisible by m; only 2, 3, 4 survive when every
/// multiplicity is at most 5.
std::vector<int> admissible_orders(const Lattice& lat);
std::vector<int> admissible_orders(const Arrangement& a);

/// Nets with 3 classes of 2, 3 or 4 lines, or 4 classes of 3 lines.
std::vector<NetStructure> small_nets(const Lattice& lat);

/// Throws std::invalid_argument for a non-essential arrangement.
MonodromyReport monodromy_verdict(const Arrangement& a);

struct TheoremCheck {
  int beta2 = 0;
  int beta3 = 0;
  bool net_found = false;
  bool three_net_found = false;
  bool forward = false;   // beta2 > 0 or beta3 > 0 implies a net
  bool converse = false;  // a 3-class net implies beta3 >= 1
  bool consistent() const { return forward && converse; }
};

/// Requires d <= 14, multiplicities <= 5 and essential input; throws
/// std::invalid_argument otherwise.
TheoremCheck crosscheck_theorem(const Arrangement& a);

}  // namespace linearr
