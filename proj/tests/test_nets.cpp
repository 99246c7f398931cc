#include <doctest.h>

#include <set>

#include "linearr/corpus.hpp"
#include "linearr/latin.hpp"
#include "linearr/nets.hpp"
#include "support.hpp"

using namespace linearr;

namespace {

const Arrangement& entry(const std::string& name) { return corpus_entry(name).arrangement; }

// Independent count: squares as tuples of permutation rows, no shared code.
long count_latin_by_rows(int q) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(q));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  long count = 0;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == q) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      bool ok = true;
      for (std::size_t r : chosen)
        for (int c = 0; c < q && ok; ++c) ok = perms[r][static_cast<std::size_t>(c)] != perms[i][static_cast<std::size_t>(c)];
      if (!ok) continue;
      chosen.push_back(i);
      self(self);
      chosen.pop_back();
    }
  };
  extend(extend);
  return count;
}

std::vector<std::vector<int>> consecutive(int k, int q) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < q; ++i) out[static_cast<std::size_t>(c)].push_back(c * q + i);
  return out;
}

LatinSquare random_paratope(std::mt19937& rng, const LatinSquare& s) {
  const int q = s.order();
  std::array<int, 3> roles{0, 1, 2};
  std::shuffle(roles.begin(), roles.end(), rng);
  return s.conjugate(roles).permuted(testing_support::random_permutation(rng, q),
                                     testing_support::random_permutation(rng, q),
                                     testing_support::random_permutation(rng, q));
}

}  // namespace

TEST_CASE("Ceva has exactly four 3-nets") {
  const auto nets = find_nets(entry("ceva3"), 3);
  CHECK(nets.size() == 4);
  CHECK(testing_support::brute_net_count(entry("ceva3"), 3) == 4);
  for (const NetStructure& n : nets) {
    CHECK(n.q == 3);
    CHECK(n.mixed_points.size() == 9);
    REQUIRE(n.square.has_value());
    CHECK(main_class_code(*n.square) == main_class_code(cyclic_square(3)));
  }
}

TEST_CASE("oracle: net counts on small corpus entries") {
  for (const CorpusEntry& e : corpus()) {
    const int d = e.arrangement.size();
    if (d > 9 || d % 3 != 0 || d < 6) continue;
    CAPTURE(e.name);
    CHECK(static_cast<long>(find_nets(e.arrangement, 3).size()) == testing_support::brute_net_count(e.arrangement, 3));
  }
  CHECK(find_nets(entry("generic-6"), 3).empty());
  CHECK(find_nets(entry("generic-9"), 3).empty());
}

TEST_CASE("braid arrangement carries the (3,2)-net") {
  const auto nets = find_nets(entry("braid-a3"), 3);
  REQUIRE(nets.size() == 1);
  REQUIRE(nets[0].square.has_value());
  CHECK(is_latin(nets[0].square->rows()));
  CHECK(nets[0].square->order() == 2);
  CHECK(main_class_code(*nets[0].square) == main_class_code(LatinSquare({{1, 2}, {2, 1}})));
}

TEST_CASE("12-line nets") {
  for (int i = 1; i <= 6; ++i) {
    const std::string name = "example-2.6-" + std::to_string(i);
    CAPTURE(name);
    const auto nets = find_nets(entry(name), 3);
    REQUIRE(nets.size() == 1);
    CHECK(nets[0].classes == consecutive(3, 4));
    REQUIRE(nets[0].square.has_value());
    CHECK(is_latin(nets[0].square->rows()));
    const LatinSquare& model = i <= 3 ? cyclic_square(4) : klein_square();
    CHECK(main_class_code(*nets[0].square) == main_class_code(model));
  }
  const auto hesse = find_nets(entry("hesse12"), 4);
  REQUIRE(hesse.size() == 1);
  CHECK(hesse[0].classes == consecutive(4, 3));
  CHECK_FALSE(hesse[0].square.has_value());
  CHECK(find_nets(entry("hesse12"), 3).empty());
}

TEST_CASE("net verification") {
  const Lattice lat(entry("ceva3"));
  CHECK(verify_net(lat, consecutive(3, 3)));
  CHECK_FALSE(verify_net(lat, {{0, 1, 3}, {2, 4, 5}, {6, 7, 8}}));
  CHECK_FALSE(verify_net(lat, {{0, 1, 2}, {3, 4, 5}}));
  CHECK_THROWS_AS(make_net(lat, {{0, 1, 3}, {2, 4, 5}, {6, 7, 8}}), std::invalid_argument);
  CHECK_THROWS_AS(find_nets(lat, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_nets(lat, 4), std::invalid_argument);
}

TEST_CASE("property: every found net re-verifies and its square is Latin") {
  std::mt19937 rng(77);
  for (const CorpusEntry& e : corpus()) {
    const Lattice lat(e.arrangement);
    for (int k : {3, 4}) {
      const int d = e.arrangement.size();
      if (d % k != 0 || d / k < 2) continue;
      for (const NetStructure& n : find_nets(lat, k)) {
        CHECK(verify_net(lat, n.classes));
        // Independent recheck of every mixed point from coordinates.
        std::vector<int> owner(static_cast<std::size_t>(d));
        for (int c = 0; c < k; ++c)
          for (int l : n.classes[static_cast<std::size_t>(c)]) owner[static_cast<std::size_t>(l)] = c;
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            if (owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)]) continue;
            std::set<int> seen;
            const auto through = testing_support::lines_through(e.arrangement, i, j);
            for (int l : through) seen.insert(owner[static_cast<std::size_t>(l)]);
            CHECK(through.size() == static_cast<std::size_t>(k));
            CHECK(seen.size() == static_cast<std::size_t>(k));
          }
        if (n.square) CHECK(is_latin(n.square->rows()));
      }
    }
  }
  // Nets survive relabelling of lines.
  const Arrangement& ceva = entry("ceva3");
  for (int i = 0; i < 5; ++i) {
    const auto perm = testing_support::random_permutation(rng, ceva.size());
    CHECK(find_nets(permute_lines(ceva, perm), 3).size() == 4);
  }
}

TEST_CASE("Latin square enumeration") {
  const int squares[] = {1, 2, 12, 576};
  const int classes[] = {1, 1, 1, 2};
  for (int q = 1; q <= 4; ++q) {
    const LatinInventory inv = enumerate_latin_squares(q);
    CHECK(inv.square_count() == static_cast<std::size_t>(squares[q - 1]));
    CHECK(inv.class_count() == static_cast<std::size_t>(classes[q - 1]));
    CHECK(count_latin_by_rows(q) == squares[q - 1]);
  }
  CHECK_THROWS_AS(enumerate_latin_squares(5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_latin_squares(0), std::invalid_argument);
}

TEST_CASE("main classes") {
  CHECK(main_class_code(cyclic_square(4)) == main_class_code(cyclic_square(4).transpose()));
  CHECK(main_class_code(cyclic_square(4)) != main_class_code(klein_square()));
  for (const auto& [code, members] : enumerate_latin_squares(3).classes)
    for (const LatinSquare& s : members) CHECK(main_class_code(s) == main_class_code(cyclic_square(3)));
  CHECK_THROWS_AS(LatinSquare({{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK(cyclic_square(3).to_string() == "1 2 3\n2 3 1\n3 1 2\n");
}

TEST_CASE("property: main class is a paratopy invariant") {
  std::mt19937 rng(88);
  const LatinInventory inv = enumerate_latin_squares(4);
  for (const auto& [code, members] : inv.classes) {
    for (int i = 0; i < 20; ++i) {
      const LatinSquare& s = members[static_cast<std::size_t>(rng() % members.size())];
      const LatinSquare image = random_paratope(rng, s);
      CHECK(is_latin(image.rows()));
      CHECK(main_class_code(image) == code);
    }
  }
}

TEST_CASE("class censuses") {
  const Lattice two(entry("example-2.6-2"));
  const auto nets2 = find_nets(two, 3);
  REQUIRE(nets2.size() == 1);
  for (const ClassCensus& cc : mixed_census(two, nets2[0])) {
    CHECK(cc.census.t(3) == 1);
    CHECK(cc.census.t(2) == 3);
    CHECK(cc.type == ClassType::WithTriplePoint);
  }
  const Lattice three(entry("example-2.6-3"));
  const auto nets3 = find_nets(three, 3);
  REQUIRE(nets3.size() == 1);
  const auto cc3 = mixed_census(three, nets3[0]);
  CHECK(std::count_if(cc3.begin(), cc3.end(), [](const ClassCensus& c) { return c.type == ClassType::WithTriplePoint; }) ==
        1);
  CHECK(cc3[1].type == ClassType::WithTriplePoint);
  CHECK(cc3[1].lines == std::vector<int>{4, 5, 6, 7});

  const Lattice ceva(entry("ceva3"));
  for (const NetStructure& n : find_nets(ceva, 3))
    for (const ClassCensus& cc : mixed_census(ceva, n)) {
      CHECK(cc.census.t(3) == 1);
      CHECK_FALSE(cc.type.has_value());
    }
}
