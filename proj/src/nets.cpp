#include "linearr/nets.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace linearr {

namespace {

std::vector<int> class_of(int d, const std::vector<std::vector<int>>& classes) {
  std::vector<int> owner(static_cast<std::size_t>(d), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int l : classes[c]) {
      if (l < 0 || l >= d || owner[static_cast<std::size_t>(l)] != -1) return {};
      owner[static_cast<std::size_t>(l)] = static_cast<int>(c);
    }
  return owner;
}

class NetSearch {
 public:
  NetSearch(const Lattice& lat, int k) : lat_(lat), d_(lat.line_count()), k_(k), q_(d_ / k) {
    owner_.assign(static_cast<std::size_t>(d_), -1);
    size_.assign(static_cast<std::size_t>(k_), 0);
  }

  std::vector<std::vector<std::vector<int>>> run() {
    assign(0, 0);
    return found_;
  }

 private:
  // Placing `line` in class `c` keeps every cross-class pair on a k-fold
  // flat whose assigned lines sit in distinct classes.
  bool consistent(int line, int c) const {
    for (int j = 0; j < line; ++j) {
      const int cj = owner_[static_cast<std::size_t>(j)];
      if (cj == c) continue;
      const Flat& f = lat_.flats()[static_cast<std::size_t>(lat_.flat_of(line, j))];
      if (f.multiplicity() != k_) return false;
      std::vector<bool> used(static_cast<std::size_t>(k_), false);
      used[static_cast<std::size_t>(c)] = true;
      for (int l : f.lines) {
        if (l == line || l > line) continue;
        const int cl = owner_[static_cast<std::size_t>(l)];
        if (used[static_cast<std::size_t>(cl)]) return false;
        used[static_cast<std::size_t>(cl)] = true;
      }
    }
    return true;
  }

  void assign(int line, int opened) {
    if (line == d_) {
      std::vector<std::vector<int>> classes(static_cast<std::size_t>(k_));
      for (int l = 0; l < d_; ++l) classes[static_cast<std::size_t>(owner_[static_cast<std::size_t>(l)])].push_back(l);
      found_.push_back(std::move(classes));
      return;
    }
    // Remaining lines must be able to fill the unopened classes.
    if ((k_ - opened) * q_ > d_ - line) return;
    const int limit = std::min(opened + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (size_[static_cast<std::size_t>(c)] == q_) continue;
      if (!consistent(line, c)) continue;
      owner_[static_cast<std::size_t>(line)] = c;
      ++size_[static_cast<std::size_t>(c)];
      assign(line + 1, std::max(opened, c + 1));
      --size_[static_cast<std::size_t>(c)];
      owner_[static_cast<std::size_t>(line)] = -1;
    }
  }

  const Lattice& lat_;
  int d_;
  int k_;
  int q_;
  std::vector<int> owner_;
  std::vector<int> size_;
  std::vector<std::vector<std::vector<int>>> found_;
};

}  // namespace

bool verify_net(const Lattice& lat, const std::vector<std::vector<int>>& classes) {
  const int d = lat.line_count();
  const int k = static_cast<int>(classes.size());
  if (k < 3) return false;
  const std::vector<int> owner = class_of(d, classes);
  if (owner.empty() || std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  const std::size_t q = classes.front().size();
  for (const auto& cls : classes)
    if (cls.size() != q) return false;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)]) continue;
      const Flat& f = lat.flats()[static_cast<std::size_t>(lat.flat_of(i, j))];
      if (f.multiplicity() != k) return false;
      std::vector<int> per_class(static_cast<std::size_t>(k), 0);
      for (int l : f.lines) ++per_class[static_cast<std::size_t>(owner[static_cast<std::size_t>(l)])];
      if (std::any_of(per_class.begin(), per_class.end(), [](int n) { return n != 1; })) return false;
    }
  }
  return true;
}

LatinSquare latin_square(const Lattice& lat, const NetStructure& n) {
  if (n.k != 3 || n.classes.size() != 3) throw std::invalid_argument("Latin squares need a net with 3 classes");
  const auto& [first, second, third] = std::tie(n.classes[0], n.classes[1], n.classes[2]);
  std::vector<std::vector<int>> rows(first.size(), std::vector<int>(second.size(), 0));
  for (std::size_t r = 0; r < first.size(); ++r) {
    for (std::size_t c = 0; c < second.size(); ++c) {
      const Flat& f = lat.flats()[static_cast<std::size_t>(lat.flat_of(first[r], second[c]))];
      for (std::size_t s = 0; s < third.size(); ++s)
        if (f.contains(third[s])) rows[r][c] = static_cast<int>(s) + 1;
    }
  }
  if (!is_latin(rows)) throw std::invalid_argument("partition is not a net");
  return LatinSquare(std::move(rows));
}

NetStructure make_net(const Lattice& lat, std::vector<std::vector<int>> classes) {
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end());
  if (!verify_net(lat, classes)) throw std::invalid_argument("partition is not a net");
  NetStructure n;
  n.k = static_cast<int>(classes.size());
  n.q = static_cast<int>(classes.front().size());
  n.classes = std::move(classes);
  for (int a : n.classes[0])
    for (int b : n.classes[1]) n.mixed_points.push_back(lat.flat_of(a, b));
  std::sort(n.mixed_points.begin(), n.mixed_points.end());
  if (n.k == 3) n.square = latin_square(lat, n);
  return n;
}

std::vector<NetStructure> find_nets(const Lattice& lat, int k) {
  const int d = lat.line_count();
  if (k < 3) throw std::invalid_argument("nets need at least 3 classes");
  if (d % k != 0)
    throw std::invalid_argument(std::to_string(k) + " does not divide the line count " + std::to_string(d));
  std::vector<NetStructure> out;
  for (auto& classes : NetSearch(lat, k).run()) out.push_back(make_net(lat, std::move(classes)));
  std::sort(out.begin(), out.end(), [](const NetStructure& a, const NetStructure& b) { return a.classes < b.classes; });
  return out;
}

std::vector<NetStructure> find_nets(const Arrangement& a, int k) { return find_nets(Lattice(a), k); }

std::vector<ClassCensus> mixed_census(const Lattice& lat, const NetStructure& n) {
  std::vector<ClassCensus> out;
  for (const auto& cls : n.classes) {
    ClassCensus cc{cls, {}, std::nullopt};
    for (const Flat& f : lat.flats()) {
      const auto inside = std::count_if(f.lines.begin(), f.lines.end(),
                                        [&](int l) { return std::binary_search(cls.begin(), cls.end(), l); });
      if (inside >= 2) ++cc.census.counts[static_cast<int>(inside)];
    }
    out.push_back(std::move(cc));
  }
  if (n.q == 4 && lat.max_multiplicity() <= 3) {
    for (ClassCensus& cc : out)
      cc.type = cc.census.t(3) > 0 ? ClassType::WithTriplePoint : ClassType::DoublePointsOnly;
  }
  return out;
}

}  // namespace linearr
