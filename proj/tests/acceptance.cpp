// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "linearr/aomoto.hpp"
#include "linearr/corpus.hpp"
#include "linearr/elimination.hpp"
#include "linearr/latin.hpp"
#include "linearr/monodromy.hpp"
#include "linearr/nets.hpp"
#include "support.hpp"

using namespace linearr;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(elapsed < limit_seconds, "over time limit");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", elapsed, limit_seconds);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << timing << "]";
  if (!o.ok) std::cout << " " << o.detail.str();
  std::cout << std::endl;
}

const Arrangement& entry(const std::string& name) { return corpus_entry(name).arrangement; }

std::string example(int i) { return "example-2.6-" + std::to_string(i); }

long power(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Order-q Latin squares counted by stacking pairwise disagreeing
// permutations; shares no code with the library.
long direct_latin_count(int q) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(q));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> rows;
  long count = 0;
  std::function<void()> grow = [&] {
    if (static_cast<int>(rows.size()) == q) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      bool ok = true;
      for (std::size_t r : rows)
        for (int c = 0; c < q && ok; ++c) ok = perms[r][static_cast<std::size_t>(c)] != perms[i][static_cast<std::size_t>(c)];
      if (!ok) continue;
      rows.push_back(i);
      grow();
      rows.pop_back();
    }
  };
  grow();
  return count;
}

struct Fingerprint {
  Census census;
  int beta2, beta3, beta5;
  std::size_t nets;
  Verdict verdict;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Arrangement& a) {
  const Lattice lat(a);
  Fingerprint f{lat.census(), beta_1p(lat, 2).beta, beta_1p(lat, 3).beta, beta_1p(lat, 5).beta, 0, Verdict::Undetermined};
  for (int k : {3, 4})
    if (a.size() % k == 0 && a.size() / k >= 2) f.nets += find_nets(lat, k).size();
  if (is_essential(a)) f.verdict = monodromy_verdict(a).verdict;
  return f;
}

}  // namespace

int main() {
  criterion(1, "censuses of the named arrangements", 1.0, [](Outcome& o) {
    auto check = [&](const Arrangement& a, int t3, int t2, const std::string& label) {
      const Census c = census(a);
      o.expect(c.t(3) == t3 && c.t(2) == t2, label + " gave " + c.to_string());
    };
    check(entry("ceva3"), 12, 0, "ceva3");
    check(entry("hesse9"), 9, 9, "hesse9");
    check(instantiate_family("pappus", Scalar(2)).arrangement, 10, 6, "pappus:2");
    const int t3[] = {16, 19, 17, 16, 19, 17};
    const int t2[] = {18, 9, 15, 18, 9, 15};
    for (int i = 0; i < 6; ++i) check(entry(example(i + 1)), t3[i], t2[i], example(i + 1));
  });

  criterion(2, "(3,4)-nets of the six 12-line examples and their main classes", 5.0, [](Outcome& o) {
    const std::vector<std::vector<int>> expected{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    const MainClassCode cyclic = main_class_code(cyclic_square(4));
    const MainClassCode klein = main_class_code(klein_square());
    for (int i = 1; i <= 6; ++i) {
      const auto nets = find_nets(entry(example(i)), 3);
      bool found = false;
      for (const NetStructure& n : nets) {
        if (n.classes != expected || !n.square) continue;
        found = true;
        o.expect(main_class_code(*n.square) == (i <= 3 ? cyclic : klein), example(i) + " main class");
      }
      o.expect(found, example(i) + " has no net with classes 1-4, 5-8, 9-12");
    }
  });

  criterion(3, "Latin square main classes and counts", 10.0, [](Outcome& o) {
    const LatinInventory three = enumerate_latin_squares(3);
    const LatinInventory four = enumerate_latin_squares(4);
    o.expect(three.class_count() == 1, "order 3 classes " + std::to_string(three.class_count()));
    o.expect(four.class_count() == 2, "order 4 classes " + std::to_string(four.class_count()));
    o.expect(three.square_count() == 12, "order 3 count " + std::to_string(three.square_count()));
    o.expect(four.square_count() == 576, "order 4 count " + std::to_string(four.square_count()));
    o.expect(direct_latin_count(3) == 12, "direct order 3 count");
    o.expect(direct_latin_count(4) == 576, "direct order 4 count");
  });

  criterion(4, "Aomoto-Betti numbers agree with exhaustive weight enumeration", 60.0, [](Outcome& o) {
    int arrangements = 0;
    for (const CorpusEntry& e : corpus()) {
      if (e.arrangement.size() > 10) continue;
      ++arrangements;
      for (int p : {2, 3, 5}) {
        const int beta = beta_1p(e.arrangement, p).beta;
        const long solutions = testing_support::brute_solution_count(e.arrangement, p);
        o.expect(solutions == power(p, beta + 1),
                 e.name + " p=" + std::to_string(p) + ": beta " + std::to_string(beta) + " vs " +
                     std::to_string(solutions) + " solutions");
      }
    }
    o.expect(arrangements >= 8, "too few arrangements with d <= 10");
  });

  criterion(5, "3-nets force beta_13 >= 1; Ceva has beta_13 = 2 and four 3-nets", 10.0, [](Outcome& o) {
    for (const CorpusEntry& e : corpus()) {
      const int d = e.arrangement.size();
      if (d % 3 != 0 || d < 6) continue;
      const Lattice lat(e.arrangement);
      if (!find_nets(lat, 3).empty()) o.expect(beta_1p(lat, 3).beta >= 1, e.name + " has a 3-net but beta_13 = 0");
    }
    o.expect(beta_1p(entry("ceva3"), 3).beta == 2, "Ceva beta_13");
    o.expect(find_nets(entry("ceva3"), 3).size() == 4, "Ceva net count");
    o.expect(testing_support::brute_net_count(entry("ceva3"), 3) == 4, "Ceva brute-force net count");
  });

  criterion(6, "14-line elimination certificate", 30.0, [](Outcome& o) {
    const EliminationCertificate cert = verify_lemma14();
    o.expect(cert.conclusion() == "no admissible solution", "conclusion: " + cert.conclusion());
    o.expect(cert.substitution_checks, "back-substitution");
    std::set<std::string> exposed;
    for (const DegenerateZero& z : cert.degenerate) {
      const auto v = cert.system.violated(z.point);
      if (cert.system.is_zero_at(z.point) && std::find(v.begin(), v.end(), z.constraint) != v.end())
        exposed.insert(z.constraint);
    }
    for (const SideConstraint& c : cert.system.constraints)
      o.expect(exposed.count(c.label) == 1, "no degenerate zero when dropping " + c.label);
  });

  criterion(7, "betti numbers detect nets for d <= 14, multiplicities <= 5", 60.0, [](Outcome& o) {
    for (const CorpusEntry& e : corpus()) {
      const Lattice lat(e.arrangement);
      if (e.arrangement.size() > 14 || lat.max_multiplicity() > 5 || !is_essential(e.arrangement)) continue;
      const TheoremCheck c = crosscheck_theorem(e.arrangement);
      const bool betti = c.beta2 > 0 || c.beta3 > 0;
      o.expect(betti == c.net_found, e.name + ": betti " + std::to_string(c.beta2) + "," + std::to_string(c.beta3) +
                                         " vs net " + (c.net_found ? "found" : "absent"));
      if (e.arrangement.size() == 14)
        o.expect(monodromy_verdict(e.arrangement).verdict == Verdict::Trivial, e.name + " is not trivial");
    }
    std::mt19937 rng(20240611);
    int random_cases = 0;
    for (int iter = 0; random_cases < 25 && iter < 500; ++iter) {
      const Arrangement a = testing_support::random_arrangement(rng, 6 + iter % 4, 2);
      if (!is_essential(a) || Lattice(a).max_multiplicity() > 5) continue;
      ++random_cases;
      o.expect(crosscheck_theorem(a).forward, "random arrangement #" + std::to_string(iter));
    }
    o.expect(random_cases >= 20, "too few random arrangements");
  });

  criterion(8, "invariance under projectivities and line permutations", 60.0, [](Outcome& o) {
    std::mt19937 rng(8);
    for (const CorpusEntry& e : corpus()) {
      const Fingerprint base = fingerprint(e.arrangement);
      const bool eisenstein = e.arrangement.field() == FieldKind::Eisenstein;
      for (int i = 0; i < 10; ++i) {
        const Matrix3 m = testing_support::random_invertible(rng, eisenstein);
        o.expect(fingerprint(apply_projectivity(e.arrangement, m)) == base, e.name + " projectivity " + std::to_string(i));
        const auto perm = testing_support::random_permutation(rng, e.arrangement.size());
        o.expect(fingerprint(permute_lines(e.arrangement, perm)) == base, e.name + " permutation " + std::to_string(i));
      }
    }
  });

  return failures;
}
