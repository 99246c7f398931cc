#include "linearr/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "linearr/nets.hpp"

namespace linearr {

namespace {

using IntTriple = std::array<long, 3>;

Arrangement rational(const std::string& name, const std::vector<IntTriple>& rows) {
  std::vector<Line> lines;
  for (const auto& r : rows) lines.emplace_back(Scalar(r[0]), Scalar(r[1]), Scalar(r[2]));
  return Arrangement(name, FieldKind::Rational, std::move(lines));
}

Scalar omega_power(int n) {
  switch (((n % 3) + 3) % 3) {
    case 0: return Scalar(1);
    case 1: return Scalar::omega();
    default: return Scalar::omega() * Scalar::omega();
  }
}

// The factors of x^3 + y^3 + z^3 - 3 w^k xyz.
std::vector<Line> triangle_fiber(int k) {
  std::vector<Line> out;
  for (int j = 0; j < 3; ++j) out.emplace_back(Scalar(1), omega_power(j + k), omega_power(2 * j));
  return out;
}

std::vector<Line> coordinate_triangle() {
  return {Line(0, 0, 1), Line(0, 1, 0), Line(1, 0, 0)};
}

Census census_of(std::initializer_list<std::pair<const int, int>> counts) { return Census{std::map<int, int>(counts)}; }

std::vector<std::vector<int>> consecutive_classes(int k, int q) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < q; ++i) out[static_cast<std::size_t>(c)].push_back(c * q + i);
  return out;
}

Arrangement generic(int n) {
  if (n < 1) throw DataError("generic family needs n >= 1");
  std::vector<IntTriple> rows;
  for (long i = 1; i <= n; ++i) rows.push_back({1, i, i * i});
  return rational("generic-" + std::to_string(n), rows);
}

Arrangement pencil(int n) {
  if (n < 1) throw DataError("pencil family needs n >= 1");
  std::vector<IntTriple> rows;
  for (long i = 0; i < n; ++i) rows.push_back({1, i, 0});
  return rational("pencil-" + std::to_string(n), rows);
}

Arrangement near_pencil(int n) {
  if (n < 2) throw DataError("near-pencil family needs n >= 2");
  std::vector<IntTriple> rows;
  for (long i = 0; i + 1 < n; ++i) rows.push_back({1, i, 0});
  rows.push_back({0, 0, 1});
  return rational("near-pencil-" + std::to_string(n), rows);
}

bool excluded_pappus_parameter(const Scalar& b) {
  return b.is_zero() || b.is_one() || b * b * b == Scalar(-1);
}

Arrangement pappus(const Scalar& b, const std::string& name) {
  if (excluded_pappus_parameter(b))
    throw DataError("parameter b = " + b.to_string() + " is excluded (b must avoid 0, 1 and the cube roots of -1)");
  const Scalar one(1);
  std::vector<Line> lines{
      Line(0, 1, 0),
      Line(one / b, one, one),
      Line(b / (b - one), 0, one),
      Line(1, 0, 0),
      Line(one, b, one),
      Line(Scalar(0), b, one),
      Line(one, b * (one - b), Scalar(0)),
      Line(1, 1, 1),
      Line(0, 0, 1),
  };
  const FieldKind field = b.is_rational() ? FieldKind::Rational : FieldKind::Eisenstein;
  return Arrangement(name, field, std::move(lines));
}

std::string pappus_name(const Scalar& b) { return "pappus(b=" + b.to_string() + ")"; }

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  const LatinSquare cyclic4 = cyclic_square(4);
  const LatinSquare klein4 = klein_square();
  const LatinSquare cyclic3 = cyclic_square(3);

  {
    std::vector<Line> lines;
    for (int j = 0; j < 3; ++j) lines.emplace_back(Scalar(1), -omega_power(j), Scalar(0));
    for (int j = 0; j < 3; ++j) lines.emplace_back(Scalar(0), Scalar(1), -omega_power(j));
    for (int j = 0; j < 3; ++j) lines.emplace_back(Scalar(1), Scalar(0), -omega_power(j));
    out.push_back({"ceva3",
                   "(x^3-y^3)(y^3-z^3)(x^3-z^3) = 0 over Q(w); the equations are supplied here, "
                   "only the name is standard",
                   Arrangement("ceva3", FieldKind::Eisenstein, std::move(lines)),
                   census_of({{3, 12}}),
                   ExpectedNet{3, consecutive_classes(3, 3), {1, 1, 1}, cyclic3}});
  }
  {
    std::vector<Line> lines = coordinate_triangle();
    for (int k = 0; k < 2; ++k)
      for (const Line& l : triangle_fiber(k)) lines.push_back(l);
    out.push_back({"hesse9",
                   "three singular fibers of the Hesse pencil: xyz and the triangles "
                   "x^3+y^3+z^3-3w^k xyz for k = 0, 1",
                   Arrangement("hesse9", FieldKind::Eisenstein, std::move(lines)),
                   census_of({{3, 9}, {2, 9}}),
                   ExpectedNet{3, consecutive_classes(3, 3), {0, 0, 0}, cyclic3}});
  }
  {
    std::vector<Line> lines = coordinate_triangle();
    for (int k = 0; k < 3; ++k)
      for (const Line& l : triangle_fiber(k)) lines.push_back(l);
    out.push_back({"hesse12", "all four singular fibers of the Hesse pencil; a (4,3)-net",
                   Arrangement("hesse12", FieldKind::Eisenstein, std::move(lines)),
                   census_of({{4, 9}, {2, 12}}),
                   ExpectedNet{4, consecutive_classes(4, 3), {0, 0, 0, 0}, std::nullopt}});
  }
  {
    std::vector<Line> lines = coordinate_triangle();
    for (int k = 0; k < 3; ++k)
      for (const Line& l : triangle_fiber(k)) lines.push_back(l);
    lines.emplace_back(1, 2, 4);
    lines.emplace_back(2, 3, 7);
    out.push_back({"hesse12-plus-2", "hesse12 with the rational lines x+2y+4z and 2x+3y+7z added",
                   Arrangement("hesse12-plus-2", FieldKind::Eisenstein, std::move(lines)),
                   census_of({{4, 9}, {2, 37}}), std::nullopt});
  }
  out.push_back({"pappus",
                 "nine-line (3,3)-net with 6 double points, parameter b = 2 (family 'pappus')",
                 pappus(Scalar(2), "pappus"), census_of({{3, 10}, {2, 6}}),
                 ExpectedNet{3, consecutive_classes(3, 3), {0, 1, 0}, cyclic3}});

  const auto example = [&](int index, const std::string& note, const std::vector<IntTriple>& rows, int t3, int t2,
                           std::vector<int> internal, const LatinSquare& square) {
    const std::string name = "example-2.6-" + std::to_string(index);
    out.push_back({name, note, rational(name, rows), census_of({{3, t3}, {2, t2}}),
                   ExpectedNet{3, consecutive_classes(3, 4), std::move(internal), square}});
  };
  example(1,
          "(3,4)-net, cyclic Latin square class, only mixed triple points; lines 3, 6, 7, 11 recomputed "
          "from the realization family fixed by lines 2, 4, 8, 9 (printed values do not realize the net)",
          {{0, 1, 0}, {10, 1, 1}, {10, 4, 7}, {5, 0, 1}, {1, 0, 0}, {5, 2, 5},
           {50, 5, 14}, {0, 2, 1}, {10, -1, 0}, {1, 1, 1}, {25, 4, 7}, {0, 0, 1}},
          16, 18, {0, 0, 0}, cyclic4);
  example(2,
          "(3,4)-net, cyclic Latin square class, internal triple points L1L2L4, L5L6L8, L9L10L12; "
          "line 11 corrected to -x+4y+3z",
          {{0, 1, 0}, {-1, 1, 1}, {2, 4, 3}, {-1, 0, 1}, {1, 0, 0}, {1, 2, 1},
           {-1, 1, 3}, {0, 2, 1}, {-1, -1, 0}, {1, 1, 1}, {-1, 4, 3}, {0, 0, 1}},
          19, 9, {1, 1, 1}, cyclic4);
  example(3,
          "(3,4)-net, cyclic Latin square class, one internal triple point L5L7L8; line 4 moved to 6x+z "
          "and lines 3, 6, 7, 11 recomputed so the stated triple point exists",
          {{0, 1, 0}, {-2, 1, 1}, {4, -10, -3}, {6, 0, 1}, {1, 0, 0}, {2, -5, 2},
           {4, -2, -1}, {0, 2, 1}, {10, 5, 0}, {1, 1, 1}, {12, -10, -3}, {0, 0, 1}},
          17, 15, {0, 1, 0}, cyclic4);
  example(4, "(3,4)-net, Klein Latin square class, only mixed triple points; coefficients as printed",
          {{0, 1, 0}, {2, 1, 1}, {12, 15, 13}, {12, 0, 1}, {1, 0, 0}, {4, 5, 4},
           {24, 12, 13}, {0, 3, 1}, {12, -3, 0}, {1, 1, 1}, {24, 15, 13}, {0, 0, 1}},
          16, 18, {0, 0, 0}, klein4);
  example(5,
          "(3,4)-net, Klein Latin square class, internal triple points L1L2L4, L5L7L8, L9L10L11; "
          "line 2 corrected to 2x+5y+5z",
          {{0, 1, 0}, {2, 5, 5}, {-2, -8, 1}, {2, 0, 5}, {1, 0, 0}, {1, 4, 1},
           {4, 10, -5}, {0, -2, 1}, {2, 10, 0}, {1, 1, 1}, {4, 40, -5}, {0, 0, 1}},
          19, 9, {1, 1, 1}, klein4);
  example(6,
          "(3,4)-net, Klein Latin square class, one internal triple point L1L2L4 (3 double points in the "
          "first class, 6 in each other); coefficients as printed",
          {{0, 1, 0}, {3, 1, 1}, {3, -1, 5}, {3, 0, 1}, {1, 0, 0}, {3, -1, 3},
           {9, 3, 5}, {0, -2, 1}, {3, 2, 0}, {1, 1, 1}, {9, -1, 5}, {0, 0, 1}},
          17, 15, {1, 0, 0}, klein4);

  out.push_back({"braid-a3", "xyz(x-y)(x-z)(y-z); a (3,2)-net",
                 rational("braid-a3", {{1, 0, 0}, {0, 1, -1}, {0, 1, 0}, {1, 0, -1}, {0, 0, 1}, {1, -1, 0}}),
                 census_of({{3, 4}, {2, 3}}), ExpectedNet{3, consecutive_classes(3, 2), {0, 0, 0}, cyclic_square(2)}});
  out.push_back({"triangle", "the coordinate triangle xyz", rational("triangle", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                 census_of({{2, 3}}), std::nullopt});
  for (int n : {6, 9, 14}) {
    Arrangement a = generic(n);
    out.push_back({a.name(), "lines x + i y + i^2 z, i = 1.." + std::to_string(n) + "; only double points", a,
                   census_of({{2, n * (n - 1) / 2}}), std::nullopt});
  }
  out.push_back({"pencil-4", "four concurrent lines x + i y, i = 0..3; not essential", pencil(4),
                 census_of({{4, 1}}), std::nullopt});
  out.push_back({"near-pencil-5", "pencil-4 plus the line z", near_pencil(5), census_of({{4, 1}, {2, 4}}),
                 std::nullopt});
  return out;
}

}  // namespace

std::vector<std::string> verify_entry(const CorpusEntry& e) {
  std::vector<std::string> problems;
  const Lattice lat(e.arrangement);
  const Census c = lat.census();
  const long d = e.arrangement.size();
  if (c != e.expected_census)
    problems.push_back(e.name + ": census " + c.to_string() + ", expected " + e.expected_census.to_string());
  if (c.pair_count() != d * (d - 1) / 2) problems.push_back(e.name + ": pair count identity fails");
  if (e.expected_net) {
    const ExpectedNet& n = *e.expected_net;
    if (!verify_net(lat, n.classes)) {
      problems.push_back(e.name + ": expected classes do not form a net");
      return problems;
    }
    const NetStructure net = make_net(lat, n.classes);
    const auto per_class = mixed_census(lat, net);
    for (std::size_t i = 0; i < per_class.size() && i < n.internal_triples.size(); ++i)
      if (per_class[i].census.t(3) != n.internal_triples[i])
        problems.push_back(e.name + ": class " + std::to_string(i + 1) + " has " +
                           std::to_string(per_class[i].census.t(3)) + " internal triple points, expected " +
                           std::to_string(n.internal_triples[i]));
    if (n.main_class_of && net.square && main_class_code(*net.square) != main_class_code(*n.main_class_of))
      problems.push_back(e.name + ": Latin square in the wrong main class");
  }
  return problems;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    auto built = build_corpus();
    std::string report;
    for (const auto& e : built)
      for (const auto& p : verify_entry(e)) report += p + "\n";
    if (!report.empty()) throw std::logic_error("corpus self-test failed:\n" + report);
    return built;
  }();
  return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  const auto& all = corpus();
  auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  if (const CorpusEntry* e = find_corpus_entry(name)) return *e;
  throw DataError("unknown corpus entry '" + name + "'");
}

std::vector<std::string> family_names() { return {"generic", "pencil", "near-pencil", "pappus"}; }

namespace {

int size_parameter(const std::string& family, const Scalar& param) {
  if (!param.is_rational() || param.re().get_den() != 1 || !param.re().get_num().fits_sint_p())
    throw DataError("family '" + family + "' needs an integer size, got " + param.to_string());
  return static_cast<int>(param.re().get_num().get_si());
}

}  // namespace

FamilyInstance instantiate_family(const std::string& family, const Scalar& param) {
  if (family == "generic") return {generic(size_parameter(family, param)), {}};
  if (family == "pencil") return {pencil(size_parameter(family, param)), {}};
  if (family == "near-pencil") return {near_pencil(size_parameter(family, param)), {}};
  if (family != "pappus") throw DataError("unknown family '" + family + "'");

  FamilyInstance inst{pappus(param, pappus_name(param)), {}};
  const Census requested = census(inst.arrangement);
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  for (int found = 0; found < 2;) {
    const Scalar b = Scalar::rational(num(rng), den(rng));
    if (excluded_pappus_parameter(b) || b == param) continue;
    ++found;
    const Census other = census(pappus(b, pappus_name(b)));
    if (other != requested)
      inst.warnings.push_back("non-generic parameter: b = " + param.to_string() + " gives " + requested.to_string() +
                              " but b = " + b.to_string() + " gives " + other.to_string());
  }
  return inst;
}

FamilyInstance instantiate_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DataError("family spec '" + spec + "' lacks ':'");
  return instantiate_family(spec.substr(0, colon), parse_scalar(spec.substr(colon + 1), FieldKind::Eisenstein));
}

}  // namespace linearr
